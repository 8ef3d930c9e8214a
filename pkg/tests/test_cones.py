import random

import pytest

from initalg.cones import (
    BOUNDARY_OTHER,
    INTERIOR,
    ORIGIN,
    OUTSIDE,
    ConeWithFaces,
    check_closure_laws,
    classify,
    cone_from_support,
    extreme_rays,
    face_interior,
    facet_normals,
    fourier_motzkin,
    gordan_decompose,
    same_cone,
)

QUADRANT = ConeWithFaces(((1, 0), (0, 1)), ((0, 1), (1, 0)))
HANOI = ConeWithFaces(((2, 1), (1, 2)), ((-1, 2), (2, -1)))


def test_classify_examples():
    assert classify(QUADRANT, (1, 1)) == INTERIOR
    assert classify(QUADRANT, (3, 0)) == face_interior(1) == "face_interior(1)"
    assert classify(QUADRANT, (-1, 0)) == OUTSIDE
    assert classify(QUADRANT, (0, 0)) == ORIGIN
    with pytest.raises(ValueError):
        classify(QUADRANT, (1, 1, 1))


def test_boundary_other_in_three_dims():
    octant = ConeWithFaces(((1, 0, 0), (0, 1, 0), (0, 0, 1)), ((0, 0, 1), (1, 0, 0)))
    assert classify(octant, (0, 5, 0)) == BOUNDARY_OTHER  # both normals vanish
    assert classify(octant, (0, 1, 1)) == face_interior(2)
    assert classify(octant, (1, 1, 1)) == INTERIOR


def test_constructor_rejects_bad_faces():
    with pytest.raises(ValueError):
        ConeWithFaces(((1, 0), (0, 1)), ((1, 1), (1, 0)))  # face {0} has no relative interior
    with pytest.raises(ValueError):
        ConeWithFaces(((1, 0), (0, 1)), ((1, -1), (1, 0)))  # not a face normal
    with pytest.raises(ValueError):
        ConeWithFaces(((1, 0),), ((0, 1),))  # r >= 2


@pytest.mark.parametrize("cone", [QUADRANT, HANOI], ids=["quadrant", "hanoi"])
def test_closure_laws(cone):
    rep = check_closure_laws(cone, samples=500, seed=3)
    assert rep.passed, rep.counterexample
    assert rep.pairs_checked == 500


def test_cone_from_support_examples():
    c = cone_from_support({(1, 0), (0, 1), (1, 1)}, [(0, 1), (1, 0)])
    assert same_cone(c.generators, QUADRANT.generators, 2)
    assert c.classify((2, 0)) == face_interior(1)
    h = cone_from_support({(2, 1), (1, 2), (3, 3)}, [(-1, 2), (2, -1)])
    assert extreme_rays(h.generators, 2) == [(1, 2), (2, 1)]
    assert all(h.contains(s) for s in [(2, 1), (1, 2), (3, 3)])
    with pytest.raises(ValueError):
        cone_from_support({(1, 0)}, [(0, 1)])
    with pytest.raises(ValueError):
        cone_from_support({(1, -1), (0, 1)}, [(0, 1), (1, 0)])


def test_regions_partition_lattice_box():
    for cone in (QUADRANT, HANOI):
        labels = {ORIGIN, INTERIOR, OUTSIDE, BOUNDARY_OTHER} | {face_interior(i) for i in (1, 2)}
        for a in range(-6, 7):
            for b in range(-6, 7):
                lab = cone.classify((a, b))
                assert lab in labels
                inside = cone.contains((a, b))
                assert (lab == OUTSIDE) == (not inside)


def _random_gens(rng, n):
    return [tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(rng.randint(1, 5))]


def test_fourier_motzkin_matches_facet_enumeration():
    rng = random.Random(42)
    for _ in range(150):
        n = rng.randint(1, 3)
        gens = _random_gens(rng, n)
        a, b = facet_normals(gens, n), fourier_motzkin(gens, n)
        for _ in range(30):
            p = tuple(rng.randint(-5, 5) for _ in range(n))
            assert a.contains(p) == b.contains(p), (gens, p)
        for g in gens:
            assert a.contains(g) and b.contains(g)


def test_gordan_numerical_semigroup():
    S = {(0,)} | {(k,) for k in range(2, 21)}
    res = gordan_decompose(S, [(2,)], 20)
    assert res.F == {(0,), (3,)}
    assert res.stabilized and not res.boundary
    for s, (f, mult) in res.decompositions.items():
        assert s[0] == f[0] + 2 * mult[0]


def test_gordan_free_monoid():
    S = {(i, j) for i in range(7) for j in range(7) if i + j <= 6}
    res = gordan_decompose(S, [(1, 0), (0, 1)], 6)
    assert res.F == {(0, 0)}
    assert res.stabilized


def _rs_monoid(D):
    return {(0, 0)} | {(i, 0) for i in range(1, D + 1)} | {
        (i, j) for i in range(1, D) for j in range(1, D) if i + j <= D
    }


def test_gordan_flags_non_finitely_generated():
    sizes = []
    for D in (6, 8):
        res = gordan_decompose(_rs_monoid(D), [(1, 0)], D)
        assert not res.stabilized
        assert res.boundary
        assert res.notes
        sizes.append(len(res.F))
    assert sizes[0] < sizes[1]


def test_gordan_decompositions_cover_below_bound():
    D = 10
    res = gordan_decompose(_rs_monoid(D), [(1, 0), (1, 1)], D)
    for s in _rs_monoid(D):
        if sum(s) <= D - 2:
            f, (m1, m2) = res.decompositions[s]
            assert f in res.F
            assert s == (f[0] + m1 + m2, f[1] + m2)


def test_gordan_rejects_generator_outside():
    with pytest.raises(ValueError):
        gordan_decompose({(0,), (2,)}, [(3,)], 5)


def test_cone_json_roundtrip():
    assert ConeWithFaces.from_json(HANOI.to_json()) == HANOI
