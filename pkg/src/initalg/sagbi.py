"""Truncated initial algebras: degree sets, minimal generators, subduction."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .construction import Construction, filtered_spanning_sets
from .laurent import LaurentPoly
from .linalg import Echelon
from .orders import Exponent, TermOrder, as_fraction

ORIGIN_PART, PHI_I_PART, J_PART = "origin", "phiI", "J"


def echelon_pivots(polys: Sequence[LaurentPoly], order: TermOrder):
    """Leading exponents of the span of ``polys`` and its reduced basis.

    Columns are sorted by ``order``; the pivot set is exactly the set of
    leading exponents of nonzero elements of the span.
    """
    polys = list(polys)
    if not polys:
        return frozenset(), []
    ech = Echelon(order).extend(polys)
    return ech.pivots, ech.basis(polys[0].dim)


def _sorted_exps(exps, order: TermOrder | None = None):
    return sorted(exps, key=order.key) if order else sorted(exps)


def minimal_monoid_generators(degrees) -> list[Exponent]:
    """Nonzero elements of ``degrees`` that are not a sum of two nonzero elements."""
    pts = {tuple(a) for a in degrees}
    zero = next(iter(pts)) if pts else ()
    zero = tuple(0 for _ in zero)
    nonzero = pts - {zero}
    out = []
    for a in nonzero:
        if not any(tuple(x - y for x, y in zip(a, b)) in nonzero for b in nonzero):
            out.append(a)
    return sorted(out)


@dataclass
class GradeGenerators:
    grade: Fraction
    count: int
    representatives: list[LaurentPoly]
    pivots: list[Exponent]


@dataclass
class DegreeReport:
    order: TermOrder
    bound: Fraction
    degrees: frozenset[Exponent]
    partition: dict[Exponent, str]
    monoid_min_gens: list[Exponent]
    algebra_new_gens_per_grade: list[GradeGenerators]
    truncated_flag: bool
    graded: bool
    spec_name: str = ""
    rho: tuple[Fraction, ...] = ()
    notes: list[str] = field(default_factory=list)

    def grade(self, a) -> Fraction:
        rho = self.rho or (1,) * len(a)
        return sum((Fraction(r) * x for r, x in zip(rho, a)), Fraction(0))

    def part(self, label: str) -> frozenset[Exponent]:
        return frozenset(a for a, l in self.partition.items() if l == label)

    def to_json(self) -> dict:
        key = self.order.key
        return {
            "spec": self.spec_name,
            "order": self.order.to_json(),
            "bound": str(self.bound),
            "graded": self.graded,
            "truncated": self.truncated_flag,
            "degrees": [list(a) for a in sorted(self.degrees, key=key)],
            "partition": {
                label: [list(a) for a in sorted(self.part(label), key=key)]
                for label in (ORIGIN_PART, PHI_I_PART, J_PART)
            },
            "monoid_min_gens": [list(a) for a in self.monoid_min_gens],
            "algebra_new_gens_per_grade": [
                {
                    "grade": str(g.grade),
                    "count": g.count,
                    "pivots": [list(p) for p in g.pivots],
                    "representatives": [r.to_json() for r in g.representatives],
                }
                for g in self.algebra_new_gens_per_grade
            ],
            "notes": list(self.notes),
            "anchor": "degree-set-partition",
        }

    def render_text(self) -> str:
        lines = [
            f"degree report  spec={self.spec_name}  order={self.order}  bound={self.bound}"
            f"  graded={self.graded}  truncated={self.truncated_flag}",
            f"{'grade':>6}  {'phiI':<40} {'J':<40}",
        ]
        grades = sorted({self.grade(a) for a in self.degrees})
        for g in grades:
            ph = [a for a in self.part(PHI_I_PART) if self.grade(a) == g]
            jj = [a for a in self.part(J_PART) if self.grade(a) == g]
            lines.append(f"{str(g):>6}  {' '.join(map(_fmt, sorted(ph))):<40} {' '.join(map(_fmt, sorted(jj))):<40}")
        lines.append(f"minimal monoid generators ({len(self.monoid_min_gens)}): "
                     + " ".join(map(_fmt, self.monoid_min_gens)))
        for g in self.algebra_new_gens_per_grade:
            lines.append(f"  new algebra generators at grade {g.grade}: {g.count}  "
                         + "; ".join(r.pretty() for r in g.representatives))
        lines += [f"note: {n}" for n in self.notes]
        return "\n".join(lines)


def _fmt(a) -> str:
    return "(" + ",".join(str(x) for x in a) + ")"


def _new_generators(c: Construction, order: TermOrder, D: Fraction, A_span) -> list[GradeGenerators]:
    """Per filtration level, span elements not reached by products of earlier choices.

    At level d the new pivots are deg(V_d + P_d) minus deg(P_d), where V_d is
    spanned by the algebra's spanning elements of grade <= d and P_d by the
    products of already chosen generators of grade <= d.  The representative
    of a new pivot is the reduced-echelon row of V_d + P_d with that pivot.
    """
    grades = sorted({c.poly_grade(f) for f in A_span if not _is_const(f)})
    chosen: list[tuple[LaurentPoly, Fraction]] = []
    out = []
    for d in grades:
        V = [f for f in A_span if not _is_const(f) and c.poly_grade(f) <= d]
        P = _chosen_products(chosen, d, c.dim)
        pech = Echelon(order).extend(P)
        full = Echelon(order).extend(P + V)
        rows = full.reduced_rows()
        new = sorted(full.pivots - pech.pivots, key=order.key)
        reps = [LaurentPoly._raw(c.dim, rows[a]) for a in new]
        for rep in reps:
            chosen.append((rep, c.poly_grade(rep)))
        out.append(GradeGenerators(d, len(new), reps, new))
    return out


def _is_const(f: LaurentPoly) -> bool:
    return f.support() <= {(0,) * f.dim}


def _chosen_products(chosen, d: Fraction, dim: int) -> list[LaurentPoly]:
    out = []

    def rec(start, acc, g):
        if g > 0:
            out.append(acc)
        for k in range(start, len(chosen)):
            f, gf = chosen[k]
            if g + gf <= d:
                rec(k, acc * f, g + gf)

    rec(0, LaurentPoly.constant(dim), Fraction(0))
    return out


def degree_monoid(c: Construction, order: TermOrder, D, with_generators: bool = True) -> DegreeReport:
    """Truncated degree set of the algebra, split into origin / phi(I) / J parts.

    The three parts have disjoint supports, so their degree sets are computed
    by separate echelon forms and then united.
    """
    D = as_fraction(D)
    spans = filtered_spanning_sets(c, D)
    phiI_deg, _ = echelon_pivots(spans.phiI_span, order)
    J_deg, _ = echelon_pivots(spans.J_span, order)
    zero = (0,) * c.dim
    overlap = (phiI_deg & J_deg) | ({zero} & (phiI_deg | J_deg))
    if overlap:
        raise AssertionError(f"degree parts overlap at {sorted(overlap)}")
    partition = {zero: ORIGIN_PART}
    partition.update({a: PHI_I_PART for a in phiI_deg})
    partition.update({a: J_PART for a in J_deg})
    degrees = frozenset(partition)
    notes = []
    if not c.graded:
        notes.append(
            "construction is not graded: filtered spans may miss low elements produced by "
            "cancellation of higher products"
        )
    gens = _new_generators(c, order, D, spans.A_span) if with_generators else []
    return DegreeReport(
        order=order,
        bound=D,
        degrees=degrees,
        partition=partition,
        monoid_min_gens=minimal_monoid_generators(degrees),
        algebra_new_gens_per_grade=gens,
        truncated_flag=True,
        graded=c.graded,
        spec_name=c.spec.name,
        rho=c.rho,
        notes=notes,
    )


def algebra_min_generators(c: Construction, order: TermOrder, D) -> list[tuple[Fraction, list[LaurentPoly]]]:
    """Per grade, representatives of algebra generators needed beyond lower grades."""
    if not c.graded:
        raise ValueError(
            "algebra_min_generators needs a graded construction; use degree_monoid and its "
            "truncated_flag for filtered ones"
        )
    D = as_fraction(D)
    spans = filtered_spanning_sets(c, D)
    return [
        (g.grade, [r.monic(order) for r in g.representatives])
        for g in _new_generators(c, order, D, spans.A_span)
        if g.count
    ]


@dataclass
class SubductionResult:
    input: LaurentPoly
    remainder: LaurentPoly
    certificate: list[tuple[Fraction, tuple[int, ...]]]
    steps: int
    exhausted: bool

    def verify(self, S: Sequence[LaurentPoly]) -> bool:
        """remainder + sum c * prod S^e == input, checked exactly."""
        total = self.remainder
        for coef, e in self.certificate:
            total = total + _power_product(S, e, self.input.dim).scale(coef)
        return total == self.input


def _power_product(S, e, dim):
    out = LaurentPoly.constant(dim)
    for s, k in zip(S, e):
        if k:
            out = out * s**k
    return out


def monoid_decomposition(target, degs, max_power: int = 8) -> tuple[int, ...] | None:
    """Exponents ``e`` with ``sum e_k degs[k] == target`` by bounded search.

    When the all-ones functional is positive on every ``degs[k]`` it bounds
    the search exactly; otherwise multiplicities are capped at ``max_power``.
    """
    target = tuple(target)
    degs = [tuple(d) for d in degs]
    if not degs:
        return () if all(x == 0 for x in target) else None
    positive = all(sum(d) > 0 for d in degs)
    budget = sum(target) if positive else None

    def rec(k, rest, acc):
        if all(x == 0 for x in rest):
            return tuple(acc + [0] * (len(degs) - k))
        if k == len(degs):
            return None
        d = degs[k]
        if positive:
            top = int(sum(rest) // sum(d))
        else:
            top = max_power
        for m in range(top, -1, -1):
            nxt = tuple(x - m * y for x, y in zip(rest, d))
            if positive and sum(nxt) < 0:
                continue
            found = rec(k + 1, nxt, acc + [m])
            if found is not None:
                return found
        return None

    if positive and budget < 0:
        return None
    return rec(0, target, [])


def subduce(f: LaurentPoly, S: Sequence[LaurentPoly], order: TermOrder, step_limit: int | None = None) -> SubductionResult:
    """Reduce ``f`` by products of ``S`` until its leading exponent leaves the monoid of leading exponents."""
    S = list(S)
    if any(s.is_zero() for s in S):
        raise ValueError("subduce needs nonzero polynomials")
    if step_limit is None:
        step_limit = 10 * max(1, len(f))
    leads = [s.leading(order) for s in S]
    degs = [e for e, _ in leads]
    g = f
    cert: list[tuple[Fraction, tuple[int, ...]]] = []
    steps = 0
    while not g.is_zero() and steps < step_limit:
        a, ca = g.leading(order)
        e = monoid_decomposition(a, degs)
        if e is None:
            break
        prod = _power_product(S, e, f.dim)
        coef = ca / prod.leading(order)[1]
        g = g - prod.scale(coef)
        cert.append((coef, e))
        steps += 1
    exhausted = steps >= step_limit and not g.is_zero() and monoid_decomposition(g.leading(order)[0], degs) is not None
    return SubductionResult(f, g, cert, steps, exhausted)
