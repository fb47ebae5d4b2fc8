import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from certrig.errors import DomainError, NonTerminationError
from certrig.taylor import (
    Polynomial,
    cos_taylor,
    factorial,
    min_degree,
    remainder_bound,
    sin_taylor,
)
from certrig.verify import oracle_sin

F = Fraction
small = st.fractions(min_value=-10, max_value=10, max_denominator=10**5)


def test_sin_taylor_examples():
    assert sin_taylor(1) == Polynomial([0, 1])
    assert sin_taylor(4) == Polynomial([0, 1, 0, F(-1, 6)])
    assert sin_taylor(0).is_zero()
    assert sin_taylor(0).degree == -1


def test_cos_taylor_examples():
    assert cos_taylor(0) == Polynomial([1])
    assert cos_taylor(2) == Polynomial([1, 0, F(-1, 2)])
    assert cos_taylor(5) == Polynomial([1, 0, F(-1, 2), 0, F(1, 24)])


@pytest.mark.parametrize("n", range(1, 40))
def test_degrees(n):
    assert sin_taylor(n).degree == 2 * ((n - 1) // 2) + 1
    assert cos_taylor(n).degree == 2 * (n // 2)


def test_negative_order_rejected():
    with pytest.raises(DomainError):
        sin_taylor(-1)
    with pytest.raises(DomainError):
        cos_taylor(-1)


def test_eval_examples():
    p = sin_taylor(4)
    assert p(F(0)) == 0
    assert cos_taylor(2)(F(1)) == F(1, 2)
    assert p(F(1, 2)) == F(23, 48)


@given(st.lists(st.fractions(max_denominator=1000), max_size=12), small)
def test_integer_horner_matches_naive(coeffs, x):
    p = Polynomial(coeffs)
    naive = sum((F(c) * x**i for i, c in enumerate(coeffs)), F(0))
    assert p(x) == naive


@given(st.lists(st.fractions(max_denominator=50), max_size=8), st.fractions(max_denominator=50), small)
def test_shifted(coeffs, c, x):
    p = Polynomial(coeffs)
    assert p.shifted(c)(x) == p(x - c)


@given(small, st.integers(min_value=0, max_value=30))
def test_parity(x, n):
    assert sin_taylor(n)(-x) == -sin_taylor(n)(x)
    assert cos_taylor(n)(-x) == cos_taylor(n)(x)


def test_factorial_cache():
    assert [factorial(k) for k in range(12)] == [math.factorial(k) for k in range(12)]
    assert factorial(115) == math.factorial(115)


def test_remainder_bound_examples():
    assert remainder_bound(F(0), 7) == 0
    assert remainder_bound(F(1), 0) == 1
    v = remainder_bound(F(4, 5), 12)
    assert v == F(4, 5) ** 13 / math.factorial(13)
    assert F(882, 10**14) < v < F(884, 10**14)


@pytest.mark.parametrize("r, n", [(10, 12), (20, 20), (50, 39), (100, 66), (200, 115)])
def test_min_degree_eps0_column(r, n):
    assert min_degree(lambda k: remainder_bound(F(4, 5), k), F(1, 10 ** (r + 1))) == n


def test_min_degree_cap():
    with pytest.raises(NonTerminationError):
        min_degree(lambda k: F(1), F(1, 2), cap=50)


def test_remainder_soundness(rng):
    for _ in range(200):
        y = F(rng.randint(-8000, 8000), 10000)
        if y == 0:
            continue
        r = rng.randint(5, 40)
        n = min_degree(lambda k: remainder_bound(abs(y), k), F(1, 10 ** (r + 1)))
        err = abs(oracle_sin(y, r + 30) - sin_taylor(n)(y))
        assert err < remainder_bound(abs(y), n) + F(1, 10 ** (r + 30))
