import json
from fractions import Fraction

import pytest

from initalg.analysis import (
    COMPLETE,
    FAILS,
    HOLDS,
    INCOMPLETE,
    check_main_hypothesis,
    classify_I,
    complement_scan,
    completeness_report,
    face_favoring_order,
    fingerprint_orders,
    mu_map,
    refinement_agreement,
)
from initalg.cli import hanoi_orders
from initalg.cones import ConeWithFaces, face_interior
from initalg.construction import ConstructionSpec, validate
from initalg.laurent import LaurentPoly
from initalg.orders import doubled_order, lex, order_from_weights, weight_order
from initalg.sagbi import J_PART, degree_monoid

x = LaurentPoly.variable(1, 0)
LEX12, LEX21 = lex(2), lex(2, [1, 0])
O_MINUS_W = weight_order([-2, -3])


def test_classify_I_examples(constructions):
    rs, q = constructions["rs"], constructions["quadratic"]
    assert classify_I(rs, x, LEX12) == 1
    assert classify_I(rs, x, LEX21) == 2
    assert classify_I(q, x**2 + x, O_MINUS_W) == 1


def test_classify_I_errors(constructions):
    with pytest.raises(ValueError):
        classify_I(constructions["rs"], LaurentPoly.zero(1), LEX12)
    with pytest.raises(ValueError):
        classify_I(constructions["rs"], x + 1, LEX12)


def test_every_source_term_classifies(constructions):
    for name, order in (("rs", LEX21), ("hanoi", LEX12), ("quadratic", O_MINUS_W)):
        c = constructions[name]
        for t in c.source_terms(5):
            i = classify_I(c, t.source, order)
            assert t.phi.degree(order) == t.images[i - 1].degree(order)


def test_mu_map_rs(constructions):
    c = constructions["rs"]
    mm = mu_map(c, LEX21, 5)
    assert mm.as_dict() == {(0, l): (l, 0) for l in range(1, 6)}
    assert mm.injective and mm.all_outside
    for rec in mm:
        assert rec.mu in rec.M_trunc
        assert all(LEX21.less(b, rec.a) for b in rec.M_trunc)
    assert len(mu_map(c, LEX12, 5)) == 0
    assert len(mu_map(c, LEX21, 0)) == 0


def test_mu_map_hanoi_lemma_signature(constructions):
    c = constructions["hanoi"]
    mm = mu_map(c, LEX21, 9)
    assert len(mm) == 3
    assert mm.injective and mm.all_outside
    js = mm.to_json()
    assert js["anchor"] == "injectivity-principle" and js["truncated"]


def test_completeness_examples(constructions):
    rs = completeness_report(constructions["rs"], LEX12, 6)
    assert rs.verdict == INCOMPLETE
    assert [f.status for f in rs.faces[0]] == ["match", "empty"]
    q = completeness_report(constructions["quadratic"], O_MINUS_W, 8)
    assert q.verdict == COMPLETE
    h = completeness_report(constructions["hanoi"], LEX12, 9)
    assert h.verdict == INCOMPLETE


def test_completeness_face_invariants(constructions):
    for name, order, D in (("rs", LEX21, 6), ("hanoi", LEX12, 9), ("quadratic", O_MINUS_W, 6)):
        c = constructions[name]
        rep = completeness_report(c, order, D)
        J = degree_monoid(c, order, D, with_generators=False).part(J_PART)
        for per_bound, bound in zip(rep.faces, rep.bounds):
            parts = [f.part for f in per_bound]
            for i, a in enumerate(parts):
                assert not (a & J)
                for b in parts[i + 1:]:
                    assert not (a & b)
            for f in per_bound:
                # face part of deg psi(I) equals deg psi_i(I_i), computed independently
                assert f.part == f.identity_check
                assert all(c.cone.classify(a) == face_interior(f.face) for a in f.part)
                if not c.graded:
                    continue  # filtered truncation bounds the element, not its leading exponent
                # closed under addition within the bound
                for a in f.part:
                    for b in f.part:
                        s = tuple(u + v for u, v in zip(a, b))
                        if c.grade(s) <= bound:
                            assert s in f.part


def test_completeness_bounds_validated(constructions):
    with pytest.raises(ValueError):
        completeness_report(constructions["rs"], LEX12, 6, 6)
    rep = completeness_report(constructions["rs"], LEX12, 4, 9)
    assert rep.bounds == (4, 9)
    assert json.dumps(rep.to_json())


def test_complement_scan_examples(constructions):
    c = constructions["rs"]
    scan = complement_scan(c, LEX21, 6)
    assert scan.counts == [1, 2, 3, 4, 5, 6]
    assert scan.strictly_increasing
    assert scan.complement == {(l, 0) for l in range(1, 7)}
    flat = complement_scan(c, LEX12, 6)
    assert flat.counts == [0] * 6 and not flat.strictly_increasing


def _mixed_sign_construction():
    t = LaurentPoly.variable(1, 0)
    X = [LaurentPoly.variable(3, i) for i in range(3)]
    cone = ConeWithFaces(((1, 0, 0), (0, 1, 0), (0, 0, 1)), ((0, 0, 1), (1, 1, 0)))
    spec = ConstructionSpec(
        source_dim=1,
        source_gens=(t,),
        embeddings=((X[0] ** 2 + X[1],), (X[2],)),
        cone=cone,
        name="mixed",
    )
    return validate(spec)


def test_main_hypothesis_examples(constructions):
    rs = check_main_hypothesis(constructions["rs"], LEX12)
    assert [(v.verdict, v.fast_path) for v in rs] == [(HOLDS, True), (HOLDS, True)]
    q = check_main_hypothesis(constructions["quadratic"], O_MINUS_W)
    assert [v.verdict for v in q] == [FAILS, FAILS]
    assert "below 0" in q[0].witness
    mixed = _mixed_sign_construction()
    order = order_from_weights([[-1, 3, 1]])
    verdicts = check_main_hypothesis(mixed, order)
    assert verdicts[0].verdict == "inconclusive"
    assert verdicts[1].verdict == HOLDS


def test_fingerprints_hanoi(constructions):
    c = constructions["hanoi"]
    orders = [LEX12, LEX21]
    for i in (1, 2):
        for base in ([1, 1], [-1, -1]):
            orders.append(face_favoring_order(c, i, base, 1)[0])
    fp = fingerprint_orders(c, orders, 9)
    assert fp.count == 2
    assert fingerprint_orders(c, [LEX12], 9).count == 1
    assert fingerprint_orders(c, hanoi_orders(c, seed=5), 9).count == 2


def test_fingerprints_doubled(constructions):
    c = constructions["doubled"]
    fp = fingerprint_orders(c, [doubled_order(2, 2), doubled_order(2, Fraction(1, 2))], 4)
    assert fp.count == 2


def test_face_favoring_order_escalates(constructions):
    c = constructions["hanoi"]
    order, lam = face_favoring_order(c, 1, [-5, 5], 1)
    assert lam > 1
    assert order.less((1, 2), (2, 1))
    order, lam = face_favoring_order(c, 2, [0, 1], 1)
    assert lam == 1 and order.less((2, 1), (1, 2))


@pytest.mark.parametrize("name", ["rs", "quadratic", "hanoi", "doubled"])
def test_refinement_agreement(constructions, name):
    c = constructions[name]
    for order in (lex(c.dim), order_from_weights([[1] * c.dim], completion="identity")):
        rep = refinement_agreement(c, order, 4)
        assert rep.agrees, (name, order)
