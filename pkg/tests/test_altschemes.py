from fractions import Fraction

import pytest

from certrig.altschemes import (
    SchemeBound,
    degree_table,
    eps1,
    eps2,
    omega1,
    scheme_degree,
    sin_point_triple,
    small_cos_40,
    small_sin_34,
    small_sin_35,
)
from certrig.errors import DomainError
from certrig.pointwise import sin_point
from certrig.taylor import factorial
from certrig.verify import oracle_cos, oracle_sin

from conftest import random_nonzero

F = Fraction
E = lambda k: F(1, 10**k)  # noqa: E731
y08 = F(4, 5)


@pytest.mark.parametrize("bound", [eps1, eps2, omega1])
def test_zero_argument(bound):
    assert bound(F(0), 7) == 0


def test_eps1_table_rows():
    assert eps1(y08, 9) < E(11) <= eps1(y08, 8)
    assert eps1(y08, 30) < E(51) <= eps1(y08, 29)


def test_eps2_table_rows():
    assert eps2(y08, 11) < E(11) <= eps2(y08, 10)
    assert eps2(y08, 106) < E(201)


def test_eps1_closed_form():
    y, n = F(1, 2), 4
    d = 3**5 * 120
    expected = 4 * (y**15 / d**3 + y**11 / d**2) + (F(4, 3) * y**2 + 3) * y**5 / d
    assert eps1(y, n) == expected


def test_omega1_dominant_term():
    for y in (F(1, 10), F(1, 2), y08, F(99, 100)):
        for n in range(0, 30):
            assert omega1(y, n) >= 5 * y ** (n + 1) / (3**n * factorial(n + 1))


def test_omega1_degree_computed():
    n_star = scheme_degree("omega1", y08, 10)
    assert omega1(y08, n_star) < E(11) <= omega1(y08, n_star - 1)


def test_scheme_bound_record():
    b = SchemeBound.compute("eps2", y08, 11)
    assert b.value == eps2(y08, 11)
    with pytest.raises(DomainError):
        SchemeBound.compute("nope", y08, 3)


def test_compositions_at_zero():
    assert small_sin_34(F(0), 5) == 0
    assert small_sin_35(F(0), 5) == 0
    for n in range(6):
        assert small_cos_40(F(0), n) == 1


def test_composition_examples():
    assert abs(small_sin_34(F(1, 2), 9) - oracle_sin(F(1, 2), 60)) <= eps1(F(1, 2), 9)
    assert abs(small_sin_34(y08, 9) - oracle_sin(y08, 30)) < E(11)
    assert abs(small_sin_35(y08, 11) - oracle_sin(y08, 30)) < E(11)
    assert small_sin_35(-y08, 11) == -small_sin_35(y08, 11)
    n = scheme_degree("omega1", y08, 10)
    assert abs(small_cos_40(y08, n) - oracle_cos(y08, 30)) < E(11)
    assert small_cos_40(-y08, n) == small_cos_40(y08, n)


@pytest.mark.parametrize("fn", [small_sin_34, small_sin_35, small_cos_40])
def test_composition_domain(fn):
    with pytest.raises(DomainError):
        fn(F(1), 3)


def test_dominant_terms_below_plain_taylor():
    for y in (F(1, 1000), F(1, 3), y08, F(999, 1000)):
        for n in range(1, 201):
            plain = y ** (n + 1) / factorial(n + 1)
            t1 = (F(4, 3) * y**2 + 3) * y ** (n + 1) / (3 ** (n + 1) * factorial(n + 1))
            t2 = F(2, 3) ** (n + 2) * y ** (n + 2) / factorial(n + 1)
            assert t1 < plain and t2 < plain


@pytest.mark.parametrize(
    "r, row",
    [
        (10, (9, 27, 11, 22, 12)),
        (20, (15, 45, 18, 36, 20)),
        (50, (30, 90, 35, 70, 39)),
        (100, (53, 159, 61, 122, 66)),
        (200, (94, 282, 106, 212, 115)),
    ],
)
def test_degree_table(r, row):
    (got,) = degree_table([r])
    assert tuple(got)[1:] == row


def test_dominance_fails_at_degree_zero():
    # first dominant term at n = 0 is (1 + 4y^2/9) y > y
    y = F(1, 2)
    assert (F(4, 3) * y**2 + 3) * y / 3 > y


def test_triple_examples():
    assert abs(sin_point_triple(F(5, 2), 12) - sin_point(F(5, 2), 12)) < 2 * E(12)
    assert abs(sin_point_triple(F(1), 10) - oracle_sin(F(1), 20)) < E(10)
    assert abs(sin_point_triple(F(49), 50) - oracle_sin(F(49), 70)) < E(50)


def test_triple_agrees_with_direct(rng):
    for _ in range(100):
        y = random_nonzero(rng, -300, 300)
        r = rng.randint(5, 60)
        t = sin_point_triple(y, r)
        assert abs(t - sin_point(y, r)) < 2 * E(r)
        assert abs(t - oracle_sin(y, r + 5)) < E(r)
