from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from certrig.errors import DomainError, ParseError
from certrig.exactnum import (
    floor_div,
    format_fixed,
    frac_part,
    parse_rational,
    rational_from_decimal,
)

rationals = st.fractions(max_denominator=10**6).filter(lambda q: abs(q) < 10**6)
positive = rationals.filter(lambda q: q > 0)


@pytest.mark.parametrize(
    "s, expected",
    [
        ("2.5", Fraction(5, 2)),
        ("3.1416", Fraction(3927, 1250)),
        ("-0.8", Fraction(-4, 5)),
        ("7", Fraction(7)),
        (".25", Fraction(1, 4)),
        ("-0.000", Fraction(0)),
    ],
)
def test_rational_from_decimal(s, expected):
    assert rational_from_decimal(s) == expected


@pytest.mark.parametrize("s", ["", "abc", "1.2.3", "1e5", "--1", "1/3"])
def test_rational_from_decimal_rejects(s):
    with pytest.raises(ParseError):
        rational_from_decimal(s)


def test_parse_rational_accepts_fractions():
    assert parse_rational("-5/2") == Fraction(-5, 2)
    assert parse_rational("6/4") == Fraction(3, 2)
    with pytest.raises(ParseError):
        parse_rational("1/0")


@pytest.mark.parametrize(
    "y, d, expected",
    [
        (Fraction(5, 2), Fraction(15708, 10000), 1),
        (Fraction(-1, 2), Fraction(15708, 10000), -1),
        (Fraction(15708, 10000), Fraction(15708, 10000), 1),
    ],
)
def test_floor_div(y, d, expected):
    assert floor_div(y, d) == expected


def test_floor_div_domain():
    with pytest.raises(DomainError):
        floor_div(Fraction(1), Fraction(0))
    with pytest.raises(DomainError):
        floor_div(Fraction(1), Fraction(-1))


@pytest.mark.parametrize(
    "x, k, expected",
    [
        (Fraction(1, 3), 4, "0.3333"),
        (Fraction(1, 2), 0, "0"),
        (Fraction(3, 2), 0, "2"),
        (Fraction(-4, 5), 2, "-0.80"),
        (Fraction(1, 200), 2, "0.00"),
        (Fraction(3, 200), 2, "0.02"),
        (Fraction(-1, 30), 3, "-0.033"),
    ],
)
def test_format_fixed(x, k, expected):
    assert format_fixed(x, k) == expected


@given(rationals, positive)
def test_floor_div_brackets(y, d):
    k = floor_div(y, d)
    assert k * d <= y < (k + 1) * d


@given(rationals, st.integers(min_value=0, max_value=30))
def test_format_parse_roundtrip(x, k):
    back = rational_from_decimal(format_fixed(x, k))
    assert abs(back - x) <= Fraction(1, 2 * 10**k)


@given(rationals)
def test_frac_part_range(x):
    t = frac_part(x)
    assert 0 <= t < 1
    assert (x - t).denominator == 1
