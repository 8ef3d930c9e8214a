"""Exact row echelon forms over order-sorted monomial columns."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .laurent import LaurentPoly
from .orders import Exponent, TermOrder


class Echelon:
    """Incremental echelon basis of a span of Laurent polynomials.

    Rows are stored monic and keyed by their leading exponent, so the key set
    is exactly the set of leading exponents of nonzero elements of the span.
    """

    def __init__(self, order: TermOrder):
        self.order = order
        self.rows: dict[Exponent, dict[Exponent, Fraction]] = {}

    def __len__(self):
        return len(self.rows)

    @property
    def pivots(self) -> frozenset[Exponent]:
        return frozenset(self.rows)

    def _lead(self, terms: dict) -> Exponent:
        return max(terms, key=self.order.key)

    def reduce(self, f: LaurentPoly | dict, full: bool = False) -> dict[Exponent, Fraction]:
        """Cancel the leading term (or, if ``full``, every term) against pivots.

        With ``full=False`` the result's leading exponent is the smallest one
        reachable by adding elements of the span.
        """
        terms = dict(f.items()) if isinstance(f, LaurentPoly) else dict(f)
        if not full:
            while terms:
                lead = self._lead(terms)
                row = self.rows.get(lead)
                if row is None:
                    break
                _axpy(terms, -terms[lead], row)
            return terms
        # full reduction: process pivot columns from the top down
        for piv in sorted(self.rows, key=self.order.key, reverse=True):
            c = terms.get(piv)
            if c:
                _axpy(terms, -c, self.rows[piv])
        return terms

    def insert(self, f: LaurentPoly | dict) -> Exponent | None:
        """Add ``f`` to the span; return the new pivot or None if dependent."""
        terms = self.reduce(f)
        if not terms:
            return None
        lead = self._lead(terms)
        inv = 1 / terms[lead]
        self.rows[lead] = {e: c * inv for e, c in terms.items()}
        return lead

    def extend(self, polys: Iterable[LaurentPoly]) -> "Echelon":
        for p in polys:
            self.insert(p)
        return self

    def reduced_rows(self) -> dict[Exponent, dict[Exponent, Fraction]]:
        """Fully interreduced (reduced row echelon) rows keyed by pivot."""
        out: dict[Exponent, dict[Exponent, Fraction]] = {}
        for piv in sorted(self.rows, key=self.order.key):
            row = dict(self.rows[piv])
            # lower pivots are final already; clear their columns from this row
            for lower, lrow in out.items():
                c = row.get(lower)
                if c:
                    _axpy(row, -c, lrow)
            out[piv] = row
        return out

    def basis(self, dim: int) -> list[LaurentPoly]:
        """Reduced basis sorted by decreasing pivot."""
        rr = self.reduced_rows()
        return [
            LaurentPoly._raw(dim, rr[p])
            for p in sorted(rr, key=self.order.key, reverse=True)
        ]


def _axpy(terms: dict, c: Fraction, row: dict) -> None:
    for e, v in row.items():
        x = terms.get(e, 0) + c * v
        if x:
            terms[e] = x
        else:
            terms.pop(e, None)


def span_degrees(polys: Iterable[LaurentPoly], order: TermOrder) -> frozenset[Exponent]:
    return Echelon(order).extend(polys).pivots


def span_rank(polys: Iterable[LaurentPoly], order: TermOrder) -> int:
    return len(Echelon(order).extend(polys))
