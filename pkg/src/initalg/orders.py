"""Group orders on Z^n realised by rational weight matrices.

A :class:`TermOrder` compares exponent vectors by the signs of successive
dot products with its rows.  Every order used by the library is of this
form; arbitrary real weight vectors are replaced by rational ones, which is
harmless as long as only finitely many exponents are ever compared.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Exponent = tuple[int, ...]

LESS, EQUAL, GREATER = -1, 0, 1


def as_fraction(value) -> Fraction:
    """Coerce ints, strings like ``"1/2"``, ``[num, den]`` pairs and Fractions."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ValueError(f"rational pair must have two entries, got {value!r}")
        return Fraction(int(value[0]), int(value[1]))
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an int, a string or a [num, den] pair")
    return Fraction(value)


def fraction_pair(q: Fraction) -> list[int]:
    return [q.numerator, q.denominator]


def dot(row: Sequence[Fraction], a: Sequence[int]) -> Fraction:
    return sum((r * x for r, x in zip(row, a)), Fraction(0))


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank over Q by fraction-exact Gaussian elimination."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rk = 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for i in range(rk + 1, len(m)):
            if m[i][c] != 0:
                f = m[i][c] / m[rk][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rk])]
        rk += 1
    return rk


@dataclass(frozen=True)
class TermOrder:
    """Total, translation invariant order on Z^n given by a rank-n matrix.

    ``a < b`` iff the first row ``r`` with ``r.a != r.b`` has ``r.a < r.b``.
    """

    rows: tuple[tuple[Fraction, ...], ...]
    name: str = ""

    def __post_init__(self):
        rows = tuple(tuple(as_fraction(x) for x in r) for r in self.rows)
        if not rows:
            raise ValueError("an order needs at least one row")
        n = len(rows[0])
        if n < 1 or any(len(r) != n for r in rows):
            raise ValueError("all weight rows must have the same positive length")
        if rank(rows) != n:
            raise ValueError(f"weight matrix has rank {rank(rows)} < {n}; order would not be total")
        object.__setattr__(self, "rows", rows)

    @property
    def dim(self) -> int:
        return len(self.rows[0])

    def key(self, a: Sequence[int]) -> tuple[Fraction, ...]:
        """Sort key: ``key(a) < key(b)`` iff ``a`` precedes ``b``."""
        if len(a) != self.dim:
            raise ValueError(f"exponent {tuple(a)} has dimension {len(a)}, order has {self.dim}")
        return tuple(dot(r, a) for r in self.rows)

    def compare(self, a: Sequence[int], b: Sequence[int]) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def less(self, a, b) -> bool:
        return self.compare(a, b) == LESS

    def to_json(self) -> dict:
        out = {"dim": self.dim, "rows": [[fraction_pair(x) for x in r] for r in self.rows]}
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, data: dict) -> "TermOrder":
        rows = [[as_fraction(x) for x in r] for r in data["rows"]]
        if "dim" in data and any(len(r) != data["dim"] for r in rows):
            raise ValueError("order rows disagree with declared dim")
        if "dim" in data and len(rows) and rank(rows) < data["dim"]:
            return order_from_weights(rows, name=data.get("name", ""))
        return cls(tuple(tuple(r) for r in rows), name=data.get("name", ""))

    def __str__(self):
        return self.name or f"TermOrder({[[str(x) for x in r] for r in self.rows]})"


def compare(order: TermOrder, a: Sequence[int], b: Sequence[int]) -> int:
    """Return LESS (-1), EQUAL (0) or GREATER (1)."""
    return order.compare(a, b)


def extreme_of_set(order: TermOrder, S: Iterable[Sequence[int]], which: str = "max") -> Exponent:
    pts = [tuple(s) for s in S]
    if not pts:
        raise ValueError("extreme_of_set of an empty set")
    if which == "max":
        return max(pts, key=order.key)
    if which == "min":
        return min(pts, key=order.key)
    raise ValueError(f"which must be 'min' or 'max', not {which!r}")


def is_monomial_order(order: TermOrder) -> bool:
    """True iff 0 < e_i for every i, i.e. the origin is the minimum of N^n."""
    for i in range(order.dim):
        lead = next((r[i] for r in order.rows if r[i] != 0), None)
        if lead is None or lead < 0:
            return False
    return True


def order_from_weights(rows, completion: str = "identity", name: str = "") -> TermOrder:
    """Build an order from (possibly rank deficient) weight rows.

    Missing rank is filled with identity rows (``completion="identity"``) or
    with the all-ones row followed by identity rows (``"grlex"``).  Only rows
    that raise the rank are appended, so the given rows are always consulted
    first.
    """
    rows = [tuple(as_fraction(x) for x in r) for r in rows]
    if not rows:
        raise ValueError("order_from_weights needs at least one row")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise ValueError("inconsistent weight row lengths")
    extra: list[tuple[Fraction, ...]] = []
    if completion == "grlex":
        extra.append(tuple(Fraction(1) for _ in range(n)))
    elif completion != "identity":
        raise ValueError(f"unknown completion {completion!r}")
    extra += [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    out = list(rows)
    rk = rank(out)
    for e in extra:
        if rk == n:
            break
        if rank(out + [e]) > rk:
            out.append(e)
            rk += 1
    return TermOrder(tuple(out), name=name)


def lex(n: int, perm: Sequence[int] | None = None, name: str = "") -> TermOrder:
    """Lexicographic order; ``perm`` lists variables from most to least significant."""
    perm = list(range(n)) if perm is None else list(perm)
    rows = [tuple(int(j == i) for j in range(n)) for i in perm]
    return TermOrder(tuple(rows), name=name or "lex" + "".join(str(i + 1) for i in perm))


def grlex(n: int, name: str = "grlex") -> TermOrder:
    return order_from_weights([[1] * n], completion="identity", name=name)


def weight_order(w: Sequence, name: str = "") -> TermOrder:
    """o(w) completed to a total order by identity rows."""
    return order_from_weights([w], completion="identity", name=name)


def doubled_order(n: int, lam, name: str = "") -> TermOrder:
    """Order on Z^n x Z^n comparing by ``(e_1, lam*e_n)`` first, grlex to break ties."""
    lam = as_fraction(lam)
    w = [Fraction(0)] * (2 * n)
    w[0] = Fraction(1)
    w[2 * n - 1] = lam
    return order_from_weights([w], completion="grlex", name=name or f"doubled(lambda={lam})")


def agrees_on(w: Sequence[Fraction], F: Iterable[Sequence[int]], order: TermOrder) -> bool:
    """``w.a < w.b  <=>  a < b`` for every pair of points of F."""
    pts = sorted({tuple(a) for a in F})
    vals = [dot(w, a) for a in pts]
    for i in range(len(pts)):
        for j in range(len(pts)):
            if i != j and (vals[i] < vals[j]) != order.less(pts[i], pts[j]):
                return False
    return True


def find_generic_weight(F: Iterable[Sequence[int]], order: TermOrder) -> tuple[Fraction, ...]:
    """Single rational weight vector inducing ``order`` on the finite set F.

    Returns ``w = sum_k eps**k * rows[k]`` with ``eps`` computed from the
    difference set so no comparison among points of F changes sign.
    """
    pts = sorted({tuple(a) for a in F})
    eps = Fraction(1, 2)
    for a in pts:
        for b in pts:
            if not order.less(a, b):
                continue
            d = [y - x for x, y in zip(a, b)]
            prods = [dot(r, d) for r in order.rows]
            k = next(i for i, p in enumerate(prods) if p != 0)
            tail = sum((abs(p) for p in prods[k + 1:]), Fraction(0))
            # eps * tail < prods[k] keeps the k-th row dominant (eps <= 1).
            eps = min(eps, prods[k] / (1 + tail))
    w = [Fraction(0)] * order.dim
    for k, r in enumerate(order.rows):
        w = [x + eps**k * y for x, y in zip(w, r)]
    w = tuple(w)
    assert agrees_on(w, pts, order)
    return w
