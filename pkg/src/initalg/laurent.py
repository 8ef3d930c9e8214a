"""Sparse Laurent polynomials over Q."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .orders import Exponent, TermOrder, as_fraction, fraction_pair


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


class LaurentPoly:
    """Immutable map from exponent tuples to nonzero Fractions.

    Terms are kept sorted by exponent tuple so equal polynomials serialise
    identically.
    """

    __slots__ = ("dim", "_terms", "_hash")

    def __init__(self, dim: int, terms: Mapping[Sequence[int], object] | Iterable = ()):
        if dim < 1:
            raise ValueError("dimension must be positive")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, Fraction] = {}
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != dim:
                raise ValueError(f"exponent {e} does not have dimension {dim}")
            acc[e] = acc.get(e, Fraction(0)) + as_fraction(c)
        self.dim = dim
        self._terms = dict(sorted((e, c) for e, c in acc.items() if c != 0))
        self._hash = None

    @classmethod
    def _raw(cls, dim: int, terms: dict) -> "LaurentPoly":
        p = cls.__new__(cls)
        p.dim = dim
        p._terms = dict(sorted(terms.items()))
        p._hash = None
        return p

    # constructors
    @classmethod
    def zero(cls, dim: int) -> "LaurentPoly":
        return cls._raw(dim, {})

    @classmethod
    def constant(cls, dim: int, c=1) -> "LaurentPoly":
        return cls(dim, {(0,) * dim: c})

    @classmethod
    def monomial(cls, exp: Sequence[int], c=1) -> "LaurentPoly":
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def variable(cls, dim: int, i: int) -> "LaurentPoly":
        return cls.monomial(tuple(int(j == i) for j in range(dim)))

    # accessors
    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def support(self) -> frozenset[Exponent]:
        return frozenset(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.dim == other.dim and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.constant(self.dim, other) if other else not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, tuple(self._terms.items())))
        return self._hash

    # arithmetic
    def _check(self, other: "LaurentPoly"):
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        return LaurentPoly.constant(self.dim, as_fraction(other))

    def __add__(self, other):
        other = self._coerce(other)
        res = dict(self._terms)
        for e, c in other._terms.items():
            v = res.get(e, 0) + c
            if v:
                res[e] = v
            else:
                res.pop(e, None)
        return LaurentPoly._raw(self.dim, res)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.dim, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "LaurentPoly":
        c = as_fraction(c)
        if c == 0:
            return LaurentPoly.zero(self.dim)
        return LaurentPoly._raw(self.dim, {e: c * v for e, v in self._terms.items()})

    def shift(self, exp: Sequence[int], c=1) -> "LaurentPoly":
        """Multiply by the monomial ``c * x**exp``."""
        c = as_fraction(c)
        exp = tuple(exp)
        if c == 0:
            return LaurentPoly.zero(self.dim)
        return LaurentPoly._raw(self.dim, {_add_exp(e, exp): c * v for e, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        self._check(other)
        res: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = _add_exp(e1, e2)
                res[e] = res.get(e, 0) + c1 * c2
        return LaurentPoly._raw(self.dim, {e: c for e, c in res.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (e, c), = self._terms.items()
            return LaurentPoly._raw(self.dim, {tuple(k * x for x in e): c**k})
        result = LaurentPoly.constant(self.dim)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # order-dependent data
    def leading(self, order: TermOrder) -> tuple[Exponent, Fraction]:
        """The order-maximal exponent of the support and its coefficient."""
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        if order.dim != self.dim:
            raise ValueError(f"order dimension {order.dim} != polynomial dimension {self.dim}")
        e = max(self._terms, key=order.key)
        return e, self._terms[e]

    def degree(self, order: TermOrder) -> Exponent:
        return self.leading(order)[0]

    def weight_degree(self, rho: Sequence[Fraction]) -> Fraction:
        """max of rho.a over the support."""
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum((r * x for r, x in zip(rho, e)), Fraction(0)) for e in self._terms)

    def is_homogeneous(self, g: Sequence[Fraction]) -> bool:
        return len({sum((r * x for r, x in zip(g, e)), Fraction(0)) for e in self._terms}) <= 1

    def restrict(self, keep) -> "LaurentPoly":
        """Terms whose exponent satisfies the predicate ``keep``."""
        return LaurentPoly._raw(self.dim, {e: c for e, c in self._terms.items() if keep(e)})

    def has_constant_term(self) -> bool:
        return (0,) * self.dim in self._terms

    def is_polynomial(self) -> bool:
        return all(x >= 0 for e in self._terms for x in e)

    def monic(self, order: TermOrder) -> "LaurentPoly":
        return self.scale(1 / self.leading(order)[1])

    # serialisation
    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "terms": [{"exp": list(e), "coef": fraction_pair(c)} for e, c in self._terms.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LaurentPoly":
        return cls(int(data["dim"]), [(t["exp"], as_fraction(t["coef"])) for t in data["terms"]])

    def __repr__(self):
        return f"LaurentPoly({self.dim}, {self.pretty()})"

    def pretty(self, names: Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.dim)]
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f + g


def multiply(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f * g


def support(f: LaurentPoly) -> frozenset[Exponent]:
    return f.support()


def leading(f: LaurentPoly, order: TermOrder) -> tuple[Exponent, Fraction]:
    return f.leading(order)


def substitute(p: LaurentPoly, images: Sequence[LaurentPoly]) -> LaurentPoly:
    """Image of ``p`` under the algebra map sending the j-th variable to ``images[j]``."""
    if len(images) != p.dim:
        raise ValueError(f"{len(images)} images given for {p.dim} source variables")
    if not images:
        raise ValueError("no images")
    n = images[0].dim
    if any(im.dim != n for im in images):
        raise ValueError("images have inconsistent dimensions")
    cache: dict[tuple[int, int], LaurentPoly] = {}

    def power(j: int, k: int) -> LaurentPoly:
        if (j, k) not in cache:
            if k < 0 and len(images[j]) != 1:
                raise ValueError(
                    f"negative exponent {k} on source variable {j} whose image is not a unit monomial"
                )
            cache[(j, k)] = images[j] ** k
        return cache[(j, k)]

    out = LaurentPoly.zero(n)
    for e, c in p.items():
        term = LaurentPoly.constant(n, c)
        for j, k in enumerate(e):
            if k:
                term = term * power(j, k)
        out = out + term
    return out
