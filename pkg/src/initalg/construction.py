"""Input data for the subalgebra construction and the objects derived from it.

A :class:`ConstructionSpec` fixes a source ring ``R = k[r_1..r_N]`` inside
a Laurent ring in ``m`` variables, embeddings ``phi_1..phi_r`` given by the
images of the source variables, a cone with ``r`` faces and a finite set U.
:func:`validate` checks the support conditions and returns a
:class:`Construction` holding the generators of ``B``, of the ideal ``J`` and
the polynomials ``phi(r_j)`` with ``phi = phi_1 + ... + phi_r``.
"""
from __future__ import annotations

import itertools
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterator, Sequence

from .cones import INTERIOR, ConeWithFaces, face_interior
from .laurent import LaurentPoly, substitute
from .linalg import span_rank
from .orders import as_fraction, dot, grlex

log = logging.getLogger(__name__)

FIXTURE_DIR = Path(__file__).resolve().parent / "fixtures"
FIXTURE_NAMES = ("rs", "quadratic", "hanoi", "doubled")


class ConstructionError(ValueError):
    """Input data violate one of the construction's conditions.

    ``condition`` is one of ``"A1"``, ``"A2"``, ``"A3"``, ``"C-face"``,
    ``"rho-positivity"``, ``"grading"`` or ``"structure"``.
    """

    def __init__(self, condition: str, message: str):
        super().__init__(f"({condition}) {message}")
        self.condition = condition


@dataclass(frozen=True)
class ConstructionSpec:
    source_dim: int
    source_gens: tuple[LaurentPoly, ...]
    embeddings: tuple[tuple[LaurentPoly, ...], ...]
    cone: ConeWithFaces
    U: tuple[LaurentPoly, ...] = ()
    filtration_vector: tuple[Fraction, ...] | None = None
    grading_vector: tuple[Fraction, ...] | None = None
    name: str = ""

    @property
    def dim(self) -> int:
        return self.cone.dim

    @property
    def r(self) -> int:
        return len(self.embeddings)

    @property
    def N(self) -> int:
        return len(self.source_gens)

    @property
    def rho(self) -> tuple[Fraction, ...]:
        if self.filtration_vector is not None:
            return self.filtration_vector
        if self.grading_vector is not None:
            return self.grading_vector
        return tuple(Fraction(1) for _ in range(self.dim))

    def to_json(self) -> dict:
        def vec(v):
            return None if v is None else [[x.numerator, x.denominator] for x in v]

        return {
            "name": self.name,
            "source_dim": self.source_dim,
            "dim": self.dim,
            "source_gens": [g.to_json() for g in self.source_gens],
            "embeddings": [[im.to_json() for im in emb] for emb in self.embeddings],
            "cone": self.cone.to_json(),
            "U": [u.to_json() for u in self.U],
            "filtration_vector": vec(self.filtration_vector),
            "grading_vector": vec(self.grading_vector),
        }

    @classmethod
    def from_json(cls, data: dict) -> "ConstructionSpec":
        try:
            def vec(key):
                v = data.get(key)
                return None if v is None else tuple(as_fraction(x) for x in v)

            return cls(
                source_dim=int(data["source_dim"]),
                source_gens=tuple(LaurentPoly.from_json(p) for p in data["source_gens"]),
                embeddings=tuple(
                    tuple(LaurentPoly.from_json(p) for p in emb) for emb in data["embeddings"]
                ),
                cone=ConeWithFaces.from_json(data["cone"]),
                U=tuple(LaurentPoly.from_json(p) for p in data.get("U", [])),
                filtration_vector=vec("filtration_vector"),
                grading_vector=vec("grading_vector"),
                name=data.get("name", ""),
            )
        except ValueError as exc:
            if isinstance(exc, ConstructionError):
                raise
            raise ConstructionError("structure", str(exc)) from exc
        except (KeyError, TypeError) as exc:
            raise ConstructionError("structure", f"malformed spec: {exc!r}") from exc


def load_spec(path) -> ConstructionSpec:
    with open(path, encoding="utf-8") as fh:
        return ConstructionSpec.from_json(json.load(fh))


def load_fixture(name: str) -> ConstructionSpec:
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}")
    return load_spec(FIXTURE_DIR / f"{name}.json")


@dataclass(frozen=True)
class SourceTerm:
    """``r^m`` for a nonzero multi-index ``m``, with its images."""

    multi_index: tuple[int, ...]
    source: LaurentPoly
    images: tuple[LaurentPoly, ...]  # phi_i(r^m), i = 1..r

    @cached_property
    def phi(self) -> LaurentPoly:
        out = self.images[0]
        for im in self.images[1:]:
            out = out + im
        return out


@dataclass
class SpanningSets:
    phiI_span: list[LaurentPoly]
    J_span: list[LaurentPoly]
    B_span: list[LaurentPoly]
    A_span: list[LaurentPoly]
    bound: Fraction
    graded: bool
    truncated_flag: bool = True


@dataclass
class Construction:
    spec: ConstructionSpec
    phi_images: tuple[tuple[LaurentPoly, ...], ...]  # [i][j] = phi_i(r_j)
    B_gens: tuple[LaurentPoly, ...]
    J_gens: tuple[LaurentPoly, ...]
    A_poly_gens: tuple[LaurentPoly, ...]
    graded: bool
    warnings: list[str] = field(default_factory=list)
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def cone(self) -> ConeWithFaces:
        return self.spec.cone

    @property
    def dim(self) -> int:
        return self.spec.dim

    @property
    def rho(self) -> tuple[Fraction, ...]:
        return self.spec.rho

    def grade(self, a) -> Fraction:
        return dot(self.rho, a)

    def poly_grade(self, f: LaurentPoly) -> Fraction:
        return f.weight_degree(self.rho)

    def embed(self, i: int, p: LaurentPoly) -> LaurentPoly:
        """phi_i(p), ``i`` 0-based."""
        return substitute(p, self.spec.embeddings[i])

    def source_terms(self, D, which: int | None = None) -> list[SourceTerm]:
        """All ``r^m`` whose image has filtration degree <= D.

        With ``which=None`` the bound applies to ``phi(r^m)``, otherwise to
        ``phi_which(r^m)`` only.  Enumeration is graded-lex on multi-indices.
        """
        D = as_fraction(D)
        key = ("source_terms", D, which)
        if key in self._cache:
            return self._cache[key]
        N, r = self.spec.N, self.spec.r
        gdeg = [[self.poly_grade(self.phi_images[i][j]) for j in range(N)] for i in range(r)]
        # grade of phi_i(r^m) is sum_j m_j gdeg[i][j]: top rho-parts multiply in a domain
        probe = range(r) if which is None else [which]
        out = []
        for m in _multi_indices(N, lambda m: all(
            sum(k * gdeg[i][j] for j, k in enumerate(m)) <= D for i in probe
        )):
            src = LaurentPoly.constant(self.spec.source_dim)
            ims = [LaurentPoly.constant(self.dim) for _ in range(r)]
            for j, k in enumerate(m):
                if k:
                    src = src * self.spec.source_gens[j] ** k
                    for i in range(r):
                        ims[i] = ims[i] * self.phi_images[i][j] ** k
            out.append(SourceTerm(m, src, tuple(ims)))
        self._cache[key] = out
        return out


def _multi_indices(N: int, ok) -> Iterator[tuple[int, ...]]:
    """Nonzero multi-indices accepted by the monotone predicate ``ok``, graded-lex."""
    total = 1
    while True:
        found = False
        for m in _compositions(total, N):
            if ok(m):
                found = True
                yield m
        if not found:
            return
        total += 1


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def validate(spec: ConstructionSpec, injectivity_probe_degree: int = 3) -> Construction:
    """Check the construction's conditions exactly and derive its generators."""
    cone, n = spec.cone, spec.dim
    if spec.N < 1:
        raise ConstructionError("A1", "need at least one source generator")
    if spec.r < 2:
        raise ConstructionError("A2", f"need at least two embeddings, got {spec.r}")
    if cone.r != spec.r:
        raise ConstructionError(
            "C-face", f"cone has {cone.r} faces but there are {spec.r} embeddings"
        )
    for j, g in enumerate(spec.source_gens, 1):
        if g.dim != spec.source_dim:
            raise ConstructionError("structure", f"source generator {j} has wrong dimension")
        if g.is_zero():
            raise ConstructionError("A1", f"source generator {j} is zero")
        if g.has_constant_term():
            raise ConstructionError(
                "A1", f"source generator {j} has a nonzero constant term, so R = k + I fails"
            )
    for i, emb in enumerate(spec.embeddings, 1):
        if len(emb) != spec.source_dim:
            raise ConstructionError(
                "structure", f"embedding {i} gives {len(emb)} images for {spec.source_dim} variables"
            )
        if any(im.dim != n for im in emb):
            raise ConstructionError("structure", f"embedding {i} has images of the wrong dimension")
    try:
        phi_images = tuple(
            tuple(substitute(g, emb) for g in spec.source_gens) for emb in spec.embeddings
        )
    except ValueError as exc:
        raise ConstructionError("A2", str(exc)) from exc

    for i in range(spec.r):
        region = face_interior(i + 1)
        for j, f in enumerate(phi_images[i], 1):
            if f.is_zero():
                raise ConstructionError("A2", f"phi_{i + 1}(r_{j}) = 0, embedding not injective")
            for a in f.support():
                lab = cone.classify(a)
                if lab != region:
                    raise ConstructionError(
                        "A2", f"support point {a} of phi_{i + 1}(r_{j}) is in region {lab}, not {region}"
                    )
    for k, u in enumerate(spec.U, 1):
        if u.dim != n:
            raise ConstructionError("structure", f"U element {k} has the wrong dimension")
        for a in u.support():
            lab = cone.classify(a)
            if lab != INTERIOR:
                raise ConstructionError("A3", f"support point {a} of U element {k} is in region {lab}")

    rho = spec.rho
    if len(rho) != n:
        raise ConstructionError("rho-positivity", "filtration vector has the wrong length")
    gens_all = [f for row in phi_images for f in row] + list(spec.U)
    for f in gens_all:
        for a in f.support():
            if dot(rho, a) <= 0:
                raise ConstructionError(
                    "rho-positivity", f"filtration vector is not positive on support point {a}"
                )

    A_poly_gens = tuple(
        sum((phi_images[i][j] for i in range(spec.r)), LaurentPoly.zero(n)) for j in range(spec.N)
    )
    graded = spec.grading_vector is not None
    if graded:
        g = spec.grading_vector
        if spec.filtration_vector is not None:
            ratio = {a / b for a, b in zip(spec.filtration_vector, g) if b != 0}
            if len(ratio) != 1 or any(
                (a == 0) != (b == 0) for a, b in zip(spec.filtration_vector, g)
            ):
                raise ConstructionError(
                    "grading", "filtration and grading vectors must be proportional"
                )
        for f in gens_all + list(A_poly_gens):
            if not f.is_homogeneous(g):
                raise ConstructionError("grading", f"{f.pretty()} is not homogeneous")

    B_gens = tuple(f for row in phi_images for f in row) + tuple(spec.U)
    J_gens = []
    for i1, i2 in itertools.combinations(range(spec.r), 2):
        for j1 in range(spec.N):
            for j2 in range(spec.N):
                J_gens.append(phi_images[i1][j1] * phi_images[i2][j2])
    J_gens = tuple(dict.fromkeys(J_gens + list(spec.U)))

    for h in J_gens:
        for a in h.support():
            if cone.classify(a) != INTERIOR:
                raise ConstructionError("C-face", f"J generator support point {a} is not interior")

    c = Construction(spec, phi_images, B_gens, J_gens, A_poly_gens, graded)
    c.warnings.append("injectivity of the embeddings is assumed, not proved")
    _probe_injectivity(c, injectivity_probe_degree)
    for w in c.warnings:
        log.info("%s: %s", spec.name or "construction", w)
    return c


def _probe_injectivity(c: Construction, max_total: int) -> None:
    """Compare ranks of {r^m} and {phi_i(r^m)} for small multi-indices.

    A rank drop exhibits a nonzero kernel element, which is a proof that
    phi_i is not injective.
    """
    spec = c.spec
    src_order = grlex(spec.source_dim)
    tgt_order = grlex(c.dim)
    terms = []
    for m in _multi_indices(spec.N, lambda m: sum(m) <= max_total):
        src = LaurentPoly.constant(spec.source_dim)
        for j, k in enumerate(m):
            src = src * spec.source_gens[j] ** k
        terms.append((m, src))
    src_rank = span_rank([t for _, t in terms], src_order)
    for i in range(spec.r):
        imgs = []
        for m, _ in terms:
            f = LaurentPoly.constant(c.dim)
            for j, k in enumerate(m):
                f = f * c.phi_images[i][j] ** k
            imgs.append(f)
        if span_rank(imgs, tgt_order) < src_rank:
            raise ConstructionError(
                "A2", f"phi_{i + 1} has a nonzero kernel among products of at most {max_total} generators"
            )
    c.warnings.append(
        f"injectivity probe passed on products of at most {max_total} source generators"
    )


def phi_apply(c: Construction, p: LaurentPoly) -> LaurentPoly:
    """phi(p) = phi_1(p) + ... + phi_r(p)."""
    out = LaurentPoly.zero(c.dim)
    for i in range(c.spec.r):
        out = out + c.embed(i, p)
    return out


def _products(gens: Sequence[LaurentPoly], grades: Sequence[Fraction], D: Fraction):
    """Distinct products of ``gens`` (including 1) with summed grade <= D."""
    n = gens[0].dim if gens else None
    out: dict[LaurentPoly, None] = {}

    def rec(start, acc, g):
        out.setdefault(acc, None)
        for k in range(start, len(gens)):
            if g + grades[k] <= D:
                rec(k, acc * gens[k], g + grades[k])

    if n is not None:
        rec(0, LaurentPoly.constant(n), Fraction(0))
    return list(out)


def filtered_spanning_sets(c: Construction, D) -> SpanningSets:
    """Finite spanning sets of the filtered pieces of phi(I), J, B and the algebra.

    For graded constructions these span the graded pieces of degree <= D
    exactly; otherwise they are approximations (``truncated_flag``).
    """
    D = as_fraction(D)
    key = ("spans", D)
    if key in c._cache:
        return c._cache[key]
    phiI = list(dict.fromkeys(t.phi for t in c.source_terms(D)))
    bgr = [c.poly_grade(b) for b in c.B_gens]
    B_span = _products(list(c.B_gens), bgr, D)
    J_span: dict[LaurentPoly, None] = {}
    for h in c.J_gens:
        gh = c.poly_grade(h)
        if gh > D:
            continue
        for mu in _products(list(c.B_gens), bgr, D - gh):
            J_span.setdefault(h * mu, None)
    J_list = list(J_span)
    one = LaurentPoly.constant(c.dim)
    A_span = [one] + phiI + J_list
    out = SpanningSets(phiI, J_list, B_span, A_span, D, c.graded, True)
    c._cache[key] = out
    return out
