import random
from fractions import Fraction

import pytest

from initalg.construction import FIXTURE_NAMES, load_fixture, validate
from initalg.laurent import LaurentPoly
from initalg.orders import TermOrder, order_from_weights


@pytest.fixture(scope="session")
def constructions():
    return {name: validate(load_fixture(name)) for name in FIXTURE_NAMES}


def random_order(rng: random.Random, n: int) -> TermOrder:
    """A random rank-n rational matrix order (rows may be rank deficient before completion)."""
    k = rng.randint(1, n)
    rows = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)] for _ in range(k)]
    if all(x == 0 for row in rows for x in row):
        rows[0][0] = Fraction(1)
    return order_from_weights(rows, completion=rng.choice(["identity", "grlex"]))


def random_exponent(rng: random.Random, n: int, lo: int = -5, hi: int = 5):
    return tuple(rng.randint(lo, hi) for _ in range(n))


def random_poly(rng: random.Random, n: int, terms: int = 4, lo: int = -3, hi: int = 3) -> LaurentPoly:
    return LaurentPoly(
        n,
        [
            (random_exponent(rng, n, lo, hi), Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
            for _ in range(rng.randint(1, terms))
        ],
    )


def nonzero_poly(rng, n, **kw) -> LaurentPoly:
    while True:
        f = random_poly(rng, n, **kw)
        if not f.is_zero():
            return f


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
