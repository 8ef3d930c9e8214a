"""Diagnostics for non-finite generation of truncated initial algebras.

The embeddings play the roles of ``psi_1..psi_r``; ``psi = sum psi_i``.
Because the ``psi_i(I)`` have pairwise disjoint supports lying in distinct
face regions, the ``psi_i``-part of ``psi(p)`` is recovered by restricting
``psi(p)`` to the exponents of face region ``i``.  All results are computed
on the filtered source space ``I_{<=D}`` and flagged as truncated.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cones import face_interior, same_cone
from .construction import Construction, filtered_spanning_sets
from .laurent import LaurentPoly
from .linalg import Echelon
from .orders import (
    Exponent,
    TermOrder,
    as_fraction,
    dot,
    find_generic_weight,
    is_monomial_order,
    order_from_weights,
)
from .sagbi import degree_monoid

COMPLETE = "complete-consistent"
INCOMPLETE = "incomplete-witnessed"
INCONCLUSIVE = "inconclusive"
HOLDS, FAILS = "holds", "fails"

ANCHOR_COMPLETENESS = "face-completeness"
ANCHOR_FINITENESS = "finiteness-principle"
ANCHOR_INJECTIVITY = "injectivity-principle"
ANCHOR_HYPOTHESIS = "origin-minimum-hypothesis"
ANCHOR_MONOMIAL = "polynomial-embedding-monomial-order"
ANCHOR_COUNT = "initial-algebra-count"
ANCHOR_REFINEMENT = "weight-refinement-agreement"


def classify_I(c: Construction, p: LaurentPoly, order: TermOrder) -> int:
    """The 1-based index ``i`` whose embedding gives ``p`` its strictly largest degree."""
    if p.is_zero():
        raise ValueError("classify_I needs a nonzero element")
    if p.has_constant_term():
        raise ValueError("classify_I needs an element without constant term")
    degs = [c.embed(i, p).degree(order) for i in range(c.spec.r)]
    best = max(range(len(degs)), key=lambda i: order.key(degs[i]))
    total = sum((c.embed(i, p) for i in range(c.spec.r)), LaurentPoly.zero(c.dim))
    assert total.degree(order) == degs[best], "degree of phi(p) is not the top embedding degree"
    assert all(order.less(degs[i], degs[best]) for i in range(len(degs)) if i != best)
    return best + 1


def _face_part(c: Construction, terms: dict, i: int) -> dict:
    region = face_interior(i)
    return {e: v for e, v in terms.items() if c.cone.classify(e) == region}


def _psi_echelon(c: Construction, order: TermOrder, D) -> Echelon:
    return Echelon(order).extend(t.phi for t in c.source_terms(D))


@dataclass
class MuRecord:
    a: Exponent
    M_trunc: frozenset[Exponent]
    mu: Exponent | None
    in_deg_psi_I: bool
    touches_bound: bool

    def to_json(self) -> dict:
        return {
            "a": list(self.a),
            "mu": None if self.mu is None else list(self.mu),
            "M_trunc": sorted(list(b) for b in self.M_trunc),
            "in_deg_psi_I": self.in_deg_psi_I,
            "touches_bound": self.touches_bound,
        }


@dataclass
class MuMap:
    pair: tuple[int, int]
    bound: Fraction
    records: list[MuRecord]

    def __iter__(self):
        return iter(self.records)

    def __len__(self):
        return len(self.records)

    @property
    def injective(self) -> bool:
        mus = [r.mu for r in self.records]
        return None not in mus and len(set(mus)) == len(mus)

    @property
    def all_outside(self) -> bool:
        return all(not r.in_deg_psi_I for r in self.records)

    def as_dict(self) -> dict[Exponent, Exponent | None]:
        return {r.a: r.mu for r in self.records}

    def to_json(self) -> dict:
        return {
            "pair": list(self.pair),
            "bound": str(self.bound),
            "records": [r.to_json() for r in self.records],
            "injective": self.injective,
            "all_outside_degree_set": self.all_outside,
            "truncated": True,
            "anchor": ANCHOR_INJECTIVITY,
        }


def mu_map(c: Construction, order: TermOrder, D, pair: tuple[int, int] = (1, 2)) -> MuMap:
    """For each truncated ``a`` in deg psi_2(I_2), the least psi_1-degree over its family.

    Stage one echelons the images ``psi(r^m)``; pivots in face region
    ``pair[1]`` are the ``a``.  Every ``p`` with ``deg psi(p) = a`` is a fixed
    such element plus a combination of echelon rows with pivot below ``a``;
    stage two reduces the ``pair[0]``-part of the fixed element against the
    ``pair[0]``-parts of those rows, which minimises its leading exponent.
    """
    D = as_fraction(D)
    i1, i2 = pair
    ech = _psi_echelon(c, order, D)
    rows = ech.rows
    pivots = sorted(rows, key=order.key)
    deg_psi_I = ech.pivots
    records = []
    grade_of = {p: max(c.grade(e) for e in rows[p]) for p in pivots}
    for k, a in enumerate(pivots):
        if c.cone.classify(a) != face_interior(i2):
            continue
        lower = pivots[:k]
        w1 = Echelon(order)
        M = set()
        for b in lower:
            part = _face_part(c, rows[b], i1)
            if part:
                w1.insert(part)
        v = _face_part(c, rows[a], i1)
        # every leading exponent met while cancelling is a member of M^a
        if v:
            M.add(max(v, key=order.key))
        nf = w1.reduce(v)
        mu = max(nf, key=order.key) if nf else None
        if mu is not None:
            M.add(mu)
        touches = any(grade_of[b] > c.grade(a) for b in lower)
        records.append(MuRecord(a, frozenset(M), mu, mu in deg_psi_I, touches))
    return MuMap(pair, D, records)


@dataclass
class FaceData:
    face: int
    part: frozenset[Exponent]  # truncated deg psi_i(I_i) as face part of deg psi(I)
    identity_check: frozenset[Exponent]  # deg psi_i(I) & deg psi(I), computed separately
    R_degrees: frozenset[Exponent]  # truncated deg psi_i(R) minus the origin
    status: str  # "match", "proper", "empty" or "trivial"


@dataclass
class CompletenessReport:
    bounds: tuple[Fraction, Fraction]
    faces: list[list[FaceData]]  # per bound
    verdict: str
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "bounds": [str(b) for b in self.bounds],
            "verdict": self.verdict,
            "faces": [
                [
                    {
                        "face": f.face,
                        "status": f.status,
                        "part": sorted(list(a) for a in f.part),
                        "identity_holds": f.part == f.identity_check,
                        "R_degrees": sorted(list(a) for a in f.R_degrees),
                    }
                    for f in per_bound
                ]
                for per_bound in self.faces
            ],
            "notes": list(self.notes),
            "truncated": True,
            "anchor": ANCHOR_COMPLETENESS,
        }


def _face_data(c: Construction, order: TermOrder, D: Fraction) -> list[FaceData]:
    deg_psi_I = _psi_echelon(c, order, D).pivots
    out = []
    for i in range(1, c.spec.r + 1):
        region = face_interior(i)
        part = frozenset(a for a in deg_psi_I if c.cone.classify(a) == region)
        deg_i = Echelon(order).extend(t.images[i - 1] for t in c.source_terms(D, which=i - 1)).pivots
        ident = frozenset(a for a in deg_i if c.grade(a) <= D) & deg_psi_I
        if not deg_i:
            status = "trivial"
        elif not part:
            status = "empty"
        elif same_cone(sorted(part), sorted(deg_i), c.dim):
            status = "match"
        else:
            status = "proper"
        out.append(FaceData(i, part, ident, deg_i, status))
    return out


def completeness_report(c: Construction, order: TermOrder, D, D2=None) -> CompletenessReport:
    """Compare, per face, the cone of the face part of deg psi(I) with the cone of deg psi_i(R).

    The verdict needs agreement at two bounds ``D < D2``: matching cones on
    every face give complete-consistent; a face whose part is empty, or
    spans the same proper subcone at both bounds, gives incomplete-witnessed.
    """
    D = as_fraction(D)
    if D2 is None:
        D2 = D + max(c.poly_grade(f) for row in c.phi_images for f in row)
    D2 = as_fraction(D2)
    if D2 <= D:
        raise ValueError("second bound must exceed the first")
    first, second = _face_data(c, order, D), _face_data(c, order, D2)
    notes = []
    for fd in first + second:
        if fd.part != fd.identity_check:
            notes.append(f"face {fd.face}: face part and deg psi_i(I) & deg psi(I) disagree")
    if all(f.status == "match" for f in first + second):
        verdict = COMPLETE
    elif any(
        a.status == b.status == "empty"
        or (
            a.status == b.status == "proper"
            and same_cone(sorted(a.part), sorted(b.part), c.dim)
            and same_cone(sorted(a.R_degrees), sorted(b.R_degrees), c.dim)
        )
        for a, b in zip(first, second)
    ):
        verdict = INCOMPLETE
    else:
        verdict = INCONCLUSIVE
    if not c.graded:
        notes.append("filtered (non-graded) construction: face parts are lower approximations")
    return CompletenessReport((D, D2), [first, second], verdict, notes)


@dataclass
class ComplementScan:
    rows: list[tuple[Fraction, int, int]]  # (grade, new at this grade, cumulative)
    complement: frozenset[Exponent]
    embedding: int

    @property
    def counts(self) -> list[int]:
        return [cum for _, _, cum in self.rows]

    @property
    def strictly_increasing(self) -> bool:
        cs = self.counts
        return all(a < b for a, b in zip(cs, cs[1:]))

    def to_json(self) -> dict:
        return {
            "embedding": self.embedding,
            "rows": [{"grade": str(g), "new": n, "cumulative": k} for g, n, k in self.rows],
            "complement": sorted(list(a) for a in self.complement),
            "strictly_increasing": self.strictly_increasing,
            "origin_excluded": True,
            "truncated": True,
            "anchor": ANCHOR_FINITENESS,
        }


def complement_scan(c: Construction, order: TermOrder, D, embedding: int = 1) -> ComplementScan:
    """Growth of (deg psi_1(R) minus deg psi(I)) by grade, origin excluded."""
    D = as_fraction(D)
    deg_1 = Echelon(order).extend(
        t.images[embedding - 1] for t in c.source_terms(D, which=embedding - 1)
    ).pivots
    deg_psi_I = _psi_echelon(c, order, D).pivots
    comp = frozenset(a for a in deg_1 if c.grade(a) <= D) - deg_psi_I
    grades = sorted({c.grade(a) for a in deg_1 if c.grade(a) <= D})
    rows, cum = [], 0
    for g in grades:
        new = sum(1 for a in comp if c.grade(a) == g)
        cum += new
        rows.append((g, new, cum))
    return ComplementScan(rows, comp, embedding)


@dataclass
class HypothesisVerdict:
    embedding: int
    verdict: str
    fast_path: bool
    witness: str = ""

    def to_json(self) -> dict:
        return {
            "embedding": self.embedding,
            "verdict": self.verdict,
            "fast_path": self.fast_path,
            "witness": self.witness,
            "anchor": ANCHOR_MONOMIAL if self.fast_path else ANCHOR_HYPOTHESIS,
        }


def check_main_hypothesis(c: Construction, order: TermOrder) -> list[HypothesisVerdict]:
    """Per embedding, whether the origin is the least degree of its image ring.

    ``holds`` when every support point of every phi_i(r_j) lies above the
    origin (translation invariance carries this to products and sums);
    ``fails`` when some phi_i(r_j) has its degree below the origin.
    """
    zero = (0,) * c.dim
    monomial = is_monomial_order(order)
    out = []
    for i in range(c.spec.r):
        images = c.phi_images[i]
        if monomial and all(f.is_polynomial() for f in images):
            out.append(HypothesisVerdict(i + 1, HOLDS, True, "monomial order, polynomial images"))
            continue
        if all(order.less(zero, a) for f in images for a in f.support()):
            out.append(HypothesisVerdict(i + 1, HOLDS, False, "all generator supports above 0"))
            continue
        below = [j for j, f in enumerate(images, 1) if order.less(f.degree(order), zero)]
        if below:
            out.append(
                HypothesisVerdict(i + 1, FAILS, False, f"deg phi_{i + 1}(r_{below[0]}) is below 0")
            )
        else:
            out.append(HypothesisVerdict(i + 1, "inconclusive", False, "mixed signs in supports"))
    return out


@dataclass
class FingerprintResult:
    classes: list[tuple[frozenset[Exponent], list[int]]]
    orders: list[TermOrder]
    bound: Fraction

    @property
    def count(self) -> int:
        return len(self.classes)

    def to_json(self) -> dict:
        return {
            "bound": str(self.bound),
            "count": self.count,
            "classes": [
                {
                    "members": [str(self.orders[k]) for k in members],
                    "degrees": sorted(list(a) for a in degs),
                }
                for degs, members in self.classes
            ],
            "truncated": True,
            "anchor": ANCHOR_COUNT,
        }


def fingerprint_orders(c: Construction, orders: Sequence[TermOrder], D) -> FingerprintResult:
    """Group orders by their truncated degree sets (equivalently, initial algebras)."""
    D = as_fraction(D)
    classes: dict[frozenset, list[int]] = {}
    for k, o in enumerate(orders):
        degs = degree_monoid(c, o, D, with_generators=False).degrees
        classes.setdefault(degs, []).append(k)
    return FingerprintResult(list(classes.items()), list(orders), D)


def face_favoring_order(c: Construction, face: int, base_w: Sequence, lam=1, max_doublings: int = 64):
    """``o(w - lam * omega_face)`` with ``lam`` doubled until face ``face`` wins.

    Winning means the order-maximum of the supports of ``phi_j(r_1)`` over
    all ``j`` lies in face region ``face``.  Returns ``(order, lam)``.
    """
    omega = c.cone.face_normals[face - 1]
    base_w = [as_fraction(x) for x in base_w]
    lam = as_fraction(lam)
    pts = sorted({a for row in c.phi_images for a in row[0].support()})
    region = face_interior(face)
    for _ in range(max_doublings):
        w = [x - lam * y for x, y in zip(base_w, omega)]
        o = order_from_weights([w], name="o(" + ",".join(str(x) for x in w) + ")")
        top = max(pts, key=o.key)
        if c.cone.classify(top) == region:
            return o, lam
        lam *= 2
    raise RuntimeError(f"no lambda up to {lam} makes face {face} maximal")


@dataclass
class RefinementCheck:
    weight: tuple[Fraction, ...]
    agrees: bool
    F_size: int

    def to_json(self) -> dict:
        return {
            "weight": [[x.numerator, x.denominator] for x in self.weight],
            "agrees": self.agrees,
            "F_size": self.F_size,
            "anchor": ANCHOR_REFINEMENT,
        }


def refinement_agreement(c: Construction, order: TermOrder, D) -> RefinementCheck:
    """Replace ``order`` by a single generic weight agreeing with it on every
    exponent of the truncated spanning set, and compare the degree sets."""
    spans = filtered_spanning_sets(c, D)
    F = {(0,) * c.dim}
    for f in spans.A_span:
        F |= f.support()
    w = find_generic_weight(F, order)
    refined = order_from_weights([w], name="o(w)")
    a = degree_monoid(c, order, D, with_generators=False).degrees
    b = degree_monoid(c, refined, D, with_generators=False).degrees
    return RefinementCheck(w, a == b, len(F))
