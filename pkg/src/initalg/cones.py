"""Rational polyhedral cones with distinguished faces.

Cones are stored by generators.  Inequality descriptions are derived on
demand: :func:`facet_normals` enumerates candidate facets spanned by
generators, :func:`fourier_motzkin` eliminates the multipliers of the
generator description.  Both give the same cone and are cross-checked in the
test suite.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .orders import Exponent, as_fraction, dot

Vector = tuple[Fraction, ...]

ORIGIN = "origin"
INTERIOR = "interior"
BOUNDARY_OTHER = "boundary_other"
OUTSIDE = "outside"


def face_interior(i: int) -> str:
    """Region label for the relative interior of face ``i`` (1-based)."""
    return f"face_interior({i})"


def _vec(v) -> Vector:
    return tuple(as_fraction(x) for x in v)


def _primitive(v: Sequence[Fraction]) -> Vector:
    """Positive rescaling to a canonical representative of the ray."""
    nz = [abs(x) for x in v if x != 0]
    if not nz:
        return tuple(Fraction(0) for _ in v)
    from math import gcd, lcm

    den = lcm(*(x.denominator for x in nz))
    ints = [int(x * den) for x in v]
    g = gcd(*ints)
    return tuple(Fraction(x, g) for x in ints)


def nullspace(rows: Sequence[Sequence[Fraction]], n: int) -> list[Vector]:
    """Basis of {x in Q^n : r.x = 0 for every row r}."""
    m = [list(map(Fraction, r)) for r in rows]
    pivcols = []
    rk = 0
    for c in range(n):
        piv = next((i for i in range(rk, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        inv = 1 / m[rk][c]
        m[rk] = [x * inv for x in m[rk]]
        for i in range(len(m)):
            if i != rk and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rk])]
        pivcols.append(c)
        rk += 1
    basis = []
    for free in (c for c in range(n) if c not in pivcols):
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for i, pc in enumerate(pivcols):
            v[pc] = -m[i][free]
        basis.append(tuple(v))
    return basis


def _rank(vectors: Sequence[Sequence[Fraction]], n: int) -> int:
    return n - len(nullspace(vectors, n)) if vectors else 0


@dataclass(frozen=True)
class HalfspaceDescription:
    """``{x : e.x = 0 for e in equations, h.x >= 0 for h in inequalities}``."""

    equations: tuple[Vector, ...]
    inequalities: tuple[Vector, ...]

    def contains(self, a: Sequence) -> bool:
        return all(dot(e, a) == 0 for e in self.equations) and all(
            dot(h, a) >= 0 for h in self.inequalities
        )


def facet_normals(generators: Sequence[Sequence], n: int) -> HalfspaceDescription:
    """Halfspace description of the cone spanned by ``generators``.

    Every facet of a d-dimensional cone contains d-1 linearly independent
    generators, so trying all such subsets finds every facet.
    """
    gens = sorted({_primitive(_vec(g)) for g in generators if any(x != 0 for x in _vec(g))})
    equations = tuple(nullspace(gens, n)) if gens else tuple(
        tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)
    )
    d = n - len(equations)
    if d == 0:
        return HalfspaceDescription(equations, ())
    normals: set[Vector] = set()
    for subset in itertools.combinations(gens, d - 1):
        if d > 1 and _rank(subset, n) < d - 1:
            continue
        ker = nullspace(list(subset) + list(equations), n)
        if len(ker) != 1:
            continue
        w = ker[0]
        vals = [dot(w, g) for g in gens]
        if all(v >= 0 for v in vals):
            normals.add(_primitive(w))
        elif all(v <= 0 for v in vals):
            normals.add(_primitive(tuple(-x for x in w)))
    # drop normals vanishing on the whole cone (they are implied equations)
    normals = {w for w in normals if any(dot(w, g) != 0 for g in gens)}
    return HalfspaceDescription(equations, tuple(sorted(normals)))


def fourier_motzkin(generators: Sequence[Sequence], n: int) -> HalfspaceDescription:
    """Halfspace description by eliminating multipliers from ``x = sum l_j g_j, l >= 0``.

    Constraints are kept as vectors ``(coeffs on x..., coeffs on l...)``.
    Exponential in the worst case; intended for small cones and as a check
    on :func:`facet_normals`.
    """
    gens = sorted({_primitive(_vec(g)) for g in generators if any(x != 0 for x in _vec(g))})
    s = len(gens)
    width = n + s
    # equalities: x_k - sum_j g_j[k] l_j = 0
    eqs = []
    for k in range(n):
        row = [Fraction(0)] * width
        row[k] = Fraction(1)
        for j, g in enumerate(gens):
            row[n + j] = -g[k]
        eqs.append(row)
    ineqs = []
    for j in range(s):
        row = [Fraction(0)] * width
        row[n + j] = Fraction(1)
        ineqs.append(row)
    # Gaussian elimination of multipliers through equalities
    for j in range(n, width):
        piv = next((e for e in eqs if e[j] != 0), None)
        if piv is None:
            continue
        eqs.remove(piv)
        def elim(r, piv=piv, j=j):
            if r[j] == 0:
                return r
            f = r[j] / piv[j]
            return [x - f * y for x, y in zip(r, piv)]
        eqs = [elim(e) for e in eqs]
        ineqs = [elim(h) for h in ineqs]
    # Fourier-Motzkin on the multipliers left
    for j in range(n, width):
        pos = [h for h in ineqs if h[j] > 0]
        neg = [h for h in ineqs if h[j] < 0]
        rest = [h for h in ineqs if h[j] == 0]
        for p in pos:
            for q in neg:
                rest.append([a * (-q[j]) + b * p[j] for a, b in zip(p, q)])
        seen = {}
        for h in rest:
            key = _primitive(h)
            if any(x != 0 for x in key):
                seen[key] = key
        ineqs = [list(h) for h in seen.values()]
    equations = [_primitive(e[:n]) for e in eqs if any(x != 0 for x in e[:n])]
    inequalities = [_primitive(h[:n]) for h in ineqs if any(x != 0 for x in h[:n])]
    return HalfspaceDescription(tuple(equations), tuple(sorted(set(inequalities))))


def in_cone(point: Sequence, generators: Sequence[Sequence], n: int) -> bool:
    return facet_normals(generators, n).contains(_vec(point))


def same_cone(gens_a: Sequence[Sequence], gens_b: Sequence[Sequence], n: int) -> bool:
    ha, hb = facet_normals(gens_a, n), facet_normals(gens_b, n)
    return all(hb.contains(_vec(g)) for g in gens_a) and all(ha.contains(_vec(g)) for g in gens_b)


def extreme_rays(generators: Sequence[Sequence], n: int) -> list[Vector]:
    """Generators (as primitive rays) not in the cone of the others."""
    gens = sorted({_primitive(_vec(g)) for g in generators if any(x != 0 for x in _vec(g))})
    return [g for g in gens if not in_cone(g, [h for h in gens if h != g], n)]


@dataclass(frozen=True)
class ConeWithFaces:
    """A cone ``C`` with faces ``C_i = {a in C : w_i.a = 0}``, ``r >= 2``.

    Construction checks that each normal is nonnegative on C and that each
    face minus the other faces is nonempty (which forces ``C_i`` not inside
    ``C_j``).
    """

    generators: tuple[Vector, ...]
    face_normals: tuple[Vector, ...]

    def __post_init__(self):
        gens = tuple(_vec(g) for g in self.generators)
        normals = tuple(_vec(w) for w in self.face_normals)
        if not gens:
            raise ValueError("a cone needs at least one generator")
        n = len(gens[0])
        if any(len(g) != n for g in gens) or any(len(w) != n for w in normals):
            raise ValueError("inconsistent dimensions in cone data")
        if len(normals) < 2:
            raise ValueError(f"need at least two faces, got {len(normals)}")
        for i, w in enumerate(normals, 1):
            for g in gens:
                if dot(w, g) < 0:
                    raise ValueError(f"normal {i} is negative on generator {g}: not a face normal")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "face_normals", normals)
        for i in range(1, len(normals) + 1):
            if self.face_probe(i) is None:
                raise ValueError(
                    f"face {i} has empty relative interior (it lies in the union of the other faces)"
                )

    @property
    def dim(self) -> int:
        return len(self.generators[0])

    @property
    def r(self) -> int:
        return len(self.face_normals)

    @cached_property
    def halfspaces(self) -> HalfspaceDescription:
        return facet_normals(self.generators, self.dim)

    def face_generators(self, i: int) -> list[Vector]:
        w = self.face_normals[i - 1]
        return [g for g in self.generators if dot(w, g) == 0]

    def face_probe(self, i: int) -> Vector | None:
        """A point of face ``i`` off every other face, or None if there is none."""
        gens = self.face_generators(i)
        if not gens:
            return None
        probe = tuple(sum(c) for c in zip(*gens))
        if all(dot(w, probe) > 0 for j, w in enumerate(self.face_normals, 1) if j != i):
            return probe
        return None

    def contains(self, a: Sequence) -> bool:
        a = _vec(a)
        if len(a) != self.dim:
            raise ValueError(f"point of dimension {len(a)} for cone of dimension {self.dim}")
        return self.halfspaces.contains(a)

    def classify(self, a: Sequence) -> str:
        a = _vec(a)
        if len(a) != self.dim:
            raise ValueError(f"point of dimension {len(a)} for cone of dimension {self.dim}")
        if all(x == 0 for x in a):
            return ORIGIN
        if not self.halfspaces.contains(a):
            return OUTSIDE
        zero = [i for i, w in enumerate(self.face_normals, 1) if dot(w, a) == 0]
        if not zero:
            return INTERIOR
        if len(zero) == 1:
            return face_interior(zero[0])
        return BOUNDARY_OTHER

    def to_json(self) -> dict:
        def enc(v):
            return [int(x) if x.denominator == 1 else [x.numerator, x.denominator] for x in v]

        return {
            "generators": [enc(g) for g in self.generators],
            "face_normals": [enc(w) for w in self.face_normals],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ConeWithFaces":
        return cls(
            tuple(tuple(g) for g in data["generators"]),
            tuple(tuple(w) for w in data["face_normals"]),
        )


def classify(cone: ConeWithFaces, a: Sequence) -> str:
    return cone.classify(a)


def cone_from_support(supports: Iterable[Sequence[int]], normals: Sequence[Sequence]) -> ConeWithFaces:
    """The cone spanned by ``supports`` with faces cut out by ``normals``."""
    pts = sorted({tuple(s) for s in supports})
    if not pts:
        raise ValueError("cone_from_support needs a nonempty support set")
    for i, w in enumerate(normals, 1):
        for s in pts:
            if dot(_vec(w), s) < 0:
                raise ValueError(f"normal {i} takes a negative value on support point {s}")
    return ConeWithFaces(tuple(pts), tuple(tuple(w) for w in normals))


@dataclass
class ClosureReport:
    passed: bool
    samples: int
    pairs_checked: int
    counterexample: tuple | None = None
    seed: int = 0


def _sample_points(cone: ConeWithFaces, rng: random.Random, count: int, scale: int = 4):
    """Lattice points spread over every region of the cone plus some outside."""
    pools = [cone.generators] + [cone.face_generators(i) for i in range(1, cone.r + 1)]
    pts = []
    for _ in range(count):
        kind = rng.randrange(len(pools) + 1)
        if kind == len(pools):
            pts.append(tuple(Fraction(rng.randint(-scale, scale)) for _ in range(cone.dim)))
            continue
        pool = pools[kind] or cone.generators
        v = [Fraction(0)] * cone.dim
        for g in pool:
            k = rng.randint(0, scale)
            v = [x + k * y for x, y in zip(v, g)]
        pts.append(tuple(v))
    return pts


def check_closure_laws(cone: ConeWithFaces, samples: int = 500, seed: int = 0) -> ClosureReport:
    """Sample the two additivity laws of the region decomposition.

    interior + anything in C stays interior; points of two different face
    interiors add up to an interior point.
    """
    rng = random.Random(seed)
    pts = _sample_points(cone, rng, samples)
    labels = [cone.classify(p) for p in pts]
    checked = 0
    for _ in range(samples):
        i, j = rng.randrange(len(pts)), rng.randrange(len(pts))
        a, b, la, lb = pts[i], pts[j], labels[i], labels[j]
        s = tuple(x + y for x, y in zip(a, b))
        ls = cone.classify(s)
        checked += 1
        if la != OUTSIDE and lb == INTERIOR and ls != INTERIOR:
            return ClosureReport(False, samples, checked, (a, b, ls), seed)
        if la.startswith("face") and lb.startswith("face") and la != lb and ls != INTERIOR:
            return ClosureReport(False, samples, checked, (a, b, ls), seed)
    return ClosureReport(True, samples, checked, None, seed)


@dataclass
class GordanResult:
    """``S_trunc`` written as ``F + sum N a_i`` inside a grade bound."""

    F: frozenset[Exponent]
    decompositions: dict[Exponent, tuple[Exponent, tuple[int, ...]]]
    boundary: frozenset[Exponent]
    stabilized: bool
    truncated: bool = True
    notes: list[str] = field(default_factory=list)


def gordan_decompose(
    S_trunc: Iterable[Sequence[int]],
    cone_gens: Sequence[Sequence[int]],
    bound,
    grading: Sequence | None = None,
) -> GordanResult:
    """Module generators of a truncated monoid over the monoid of ``cone_gens``.

    ``F`` holds the elements from which no ``a_i`` can be subtracted inside
    ``S_trunc``.  Every element gets an explicit decomposition
    ``s = f + sum n_i a_i``.  Elements of F whose grade exceeds
    ``bound - max grade(a_i)`` mark a non-stabilised F.
    """
    S = {tuple(s) for s in S_trunc}
    gens = [tuple(a) for a in cone_gens]
    for a in gens:
        if a not in S:
            raise ValueError(f"cone generator {a} is not in the truncated monoid")
    if not S:
        raise ValueError("empty monoid")
    n = len(next(iter(S)))
    grading = _vec(grading) if grading is not None else tuple(Fraction(1) for _ in range(n))
    bound = as_fraction(bound)

    def grade(v):
        return dot(grading, v)

    for s in S:
        if grade(s) > bound:
            raise ValueError(f"{s} lies above the grade bound {bound}")
    F = frozenset(
        s for s in S if all(tuple(x - y for x, y in zip(s, a)) not in S for a in gens)
    )
    decomp: dict[Exponent, tuple[Exponent, tuple[int, ...]]] = {}
    for s in sorted(S, key=grade):
        if s in F:
            decomp[s] = (s, (0,) * len(gens))
            continue
        for k, a in enumerate(gens):
            t = tuple(x - y for x, y in zip(s, a))
            if t in S:
                f, mult = decomp[t]
                mult = tuple(m + (i == k) for i, m in enumerate(mult))
                decomp[s] = (f, mult)
                break
    top = max((grade(a) for a in gens), default=Fraction(0))
    boundary = frozenset(f for f in F if grade(f) > bound - top)
    notes = []
    if boundary:
        notes.append(
            "F still gains elements near the grade bound; the cone of S is probably not "
            "spanned by the given generators, so no finite F is expected"
        )
    return GordanResult(F, decomp, boundary, not boundary, True, notes)
