import json
import random

import pytest

from initalg.cones import INTERIOR, ORIGIN, OUTSIDE, face_interior
from initalg.construction import (
    FIXTURE_DIR,
    ConstructionError,
    ConstructionSpec,
    filtered_spanning_sets,
    load_fixture,
    phi_apply,
    validate,
)
from initalg.laurent import LaurentPoly
from initalg.linalg import Echelon
from initalg.orders import grlex

x = LaurentPoly.variable(1, 0)
x1, x2 = LaurentPoly.variable(2, 0), LaurentPoly.variable(2, 1)


def fixture_dict(name):
    return json.loads((FIXTURE_DIR / f"{name}.json").read_text())


def with_source_gens(name, gens):
    data = fixture_dict(name)
    data["source_gens"] = [g.to_json() for g in gens]
    return ConstructionSpec.from_json(data)


def in_span(f, polys):
    ech = Echelon(grlex(f.dim)).extend(polys)
    return not ech.reduce(f, full=True)


def test_rs_construction(constructions):
    c = constructions["rs"]
    assert c.A_poly_gens == (x1 + x2,)
    assert c.J_gens == (x1 * x2,)
    assert c.graded


def test_quadratic_construction(constructions):
    c = constructions["quadratic"]
    assert c.phi_images[0][0] == x1**2 + x1
    assert all(c.cone.classify(a) == face_interior(1) for a in c.phi_images[0][0].support())
    assert not c.graded


def test_constant_term_rejected_as_A1():
    spec = with_source_gens("rs", [x + 1])
    with pytest.raises(ConstructionError) as err:
        validate(spec)
    assert err.value.condition == "A1"
    assert "(A1)" in str(err.value)


def test_support_outside_face_rejected_as_A2():
    data = fixture_dict("rs")
    data["embeddings"][0] = [(x1 + x2).to_json()]
    with pytest.raises(ConstructionError) as err:
        validate(ConstructionSpec.from_json(data))
    assert err.value.condition == "A2"


def test_non_injective_embedding_rejected():
    # t1 and t2 both go to x1, so t1 - t2 lies in the kernel of the first embedding
    t1, t2 = LaurentPoly.variable(2, 0), LaurentPoly.variable(2, 1)
    data = fixture_dict("rs")
    data.update(
        source_dim=2,
        source_gens=[t1.to_json(), t2.to_json()],
        embeddings=[[x1.to_json(), x1.to_json()], [x2.to_json(), (x2**2).to_json()]],
        grading_vector=None,
    )
    with pytest.raises(ConstructionError) as err:
        validate(ConstructionSpec.from_json(data))
    assert err.value.condition == "A2"
    assert "kernel" in str(err.value)


def test_U_outside_interior_rejected_as_A3():
    data = fixture_dict("rs")
    data["U"] = [(x1**2).to_json()]
    with pytest.raises(ConstructionError) as err:
        validate(ConstructionSpec.from_json(data))
    assert err.value.condition == "A3"


def test_U_in_interior_accepted():
    data = fixture_dict("rs")
    data["U"] = [(x1 * x2**2).to_json()]
    data["grading_vector"] = None
    c = validate(ConstructionSpec.from_json(data))
    assert x1 * x2**2 in c.J_gens


def test_grading_violation_rejected():
    data = fixture_dict("rs")
    data["U"] = [(x1 * x2 + x1**2 * x2**2).to_json()]
    with pytest.raises(ConstructionError) as err:
        validate(ConstructionSpec.from_json(data))
    assert err.value.condition == "grading"


def test_single_embedding_rejected():
    data = fixture_dict("rs")
    data["embeddings"] = data["embeddings"][:1]
    with pytest.raises((ConstructionError, ValueError)):
        validate(ConstructionSpec.from_json(data))


def test_malformed_spec_is_structure_error():
    with pytest.raises(ConstructionError) as err:
        ConstructionSpec.from_json({"source_dim": 1})
    assert err.value.condition == "structure"


def test_validate_warns_about_injectivity(constructions):
    assert any("injectivity" in w for w in constructions["rs"].warnings)


def test_spec_json_roundtrip():
    spec = load_fixture("hanoi")
    assert ConstructionSpec.from_json(json.loads(json.dumps(spec.to_json()))) == spec


def test_phi_apply_examples(constructions):
    c = constructions["rs"]
    assert phi_apply(c, x) == x1 + x2
    for i in range(1, 6):
        assert phi_apply(c, x**i) == x1**i + x2**i
    assert phi_apply(c, LaurentPoly.zero(1)).is_zero()


def test_rs_spans(constructions):
    c = constructions["rs"]
    s2 = filtered_spanning_sets(c, 2)
    assert set(s2.phiI_span) == {x1 + x2, x1**2 + x2**2}
    assert set(s2.J_span) == {x1 * x2}
    s1 = filtered_spanning_sets(c, 1)
    assert s1.A_span == [LaurentPoly.constant(2), x1 + x2]


def test_hanoi_spans(constructions):
    c = constructions["hanoi"]
    s = filtered_spanning_sets(c, 6)
    m = LaurentPoly.monomial
    assert m((3, 3)) in s.J_span
    assert m((2, 1)) + m((1, 2)) in s.phiI_span
    assert m((4, 2)) + m((2, 4)) in s.phiI_span


def test_products_computed_in_source_ring(constructions):
    c = constructions["quadratic"]
    r1 = x**2 + x
    target = phi_apply(c, r1 * r1)
    s = filtered_spanning_sets(c, 4)
    assert target in s.phiI_span
    # squaring phi(r1) instead would add the cross term 2 phi_1(r1) phi_2(r1)
    assert phi_apply(c, r1) ** 2 != target


@pytest.mark.parametrize("name", ["rs", "quadratic", "hanoi", "doubled"])
def test_support_containments(constructions, name):
    c = constructions[name]
    s = filtered_spanning_sets(c, 5 if name != "doubled" else 4)
    for f in s.B_span:
        assert all(c.cone.classify(a) != OUTSIDE for a in f.support())
    for g in s.J_span:
        assert all(c.cone.classify(a) == INTERIOR for a in g.support())
    for p in s.phiI_span:
        labels = {c.cone.classify(a) for a in p.support()}
        assert labels <= {face_interior(i) for i in range(1, c.spec.r + 1)}
    for f in c.A_poly_gens:
        assert all(c.cone.classify(a).startswith("face_interior") for a in f.support())


@pytest.mark.parametrize("name", ["rs", "quadratic", "hanoi", "doubled"])
def test_span_part_supports_disjoint(constructions, name):
    c = constructions[name]
    s = filtered_spanning_sets(c, 4)
    phi_supp = set().union(*(p.support() for p in s.phiI_span))
    J_supp = set().union(*(g.support() for g in s.J_span)) if s.J_span else set()
    zero = {(0,) * c.dim}
    assert not (phi_supp & J_supp) and not (zero & phi_supp) and not (zero & J_supp)


def test_integrality_witness_rs(constructions):
    c = constructions["rs"]
    for D in (2, 3):
        s = filtered_spanning_sets(c, D)
        assert in_span(x1 + x2, s.A_span)
        assert in_span(x1 * x2, s.A_span)


def test_multiplicative_mod_J():
    rng = random.Random(8)
    for name in ("rs", "quadratic"):
        c = validate(load_fixture(name))
        r = c.spec.source_gens[0]
        for _ in range(15):
            p = r ** rng.randint(1, 2) + (r ** rng.randint(1, 3)).scale(rng.randint(1, 3))
            q = (r ** rng.randint(1, 2)).scale(rng.randint(1, 3))
            diff = phi_apply(c, p) * phi_apply(c, q) - phi_apply(c, p * q)
            assert not diff.is_zero()
            assert in_span(diff, filtered_spanning_sets(c, c.poly_grade(diff)).J_span)
