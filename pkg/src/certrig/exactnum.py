"""Exact rational arithmetic helpers and decimal I/O.

``Rational`` is :class:`fractions.Fraction`; it is always kept in lowest
terms with a positive denominator, and every arithmetic operation on it is
exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from .errors import DomainError, ParseError

Rational = Fraction

_DECIMAL_RE = re.compile(r"^\s*([+-]?)(\d+)(?:\.(\d*))?\s*$")
_LEADING_DOT_RE = re.compile(r"^\s*([+-]?)\.(\d+)\s*$")
_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$")


def rational_from_decimal(s: str) -> Fraction:
    """Parse ``[-]digits[.digits]`` into the exact rational it denotes.

    >>> rational_from_decimal("3.1416")
    Fraction(3927, 1250)
    """
    m = _DECIMAL_RE.match(s)
    if m:
        sign, whole, frac = m.group(1), m.group(2), m.group(3) or ""
    else:
        m = _LEADING_DOT_RE.match(s)
        if not m:
            raise ParseError(f"malformed decimal numeral: {s!r}")
        sign, whole, frac = m.group(1), "0", m.group(2)
    value = Fraction(int(whole + frac), 10 ** len(frac))
    return -value if sign == "-" else value


def parse_rational(s: str) -> Fraction:
    """Parse either a decimal numeral or a fraction ``[-]int/int``."""
    m = _FRACTION_RE.match(s)
    if m:
        den = int(m.group(2))
        if den == 0:
            raise ParseError(f"zero denominator in {s!r}")
        return Fraction(int(m.group(1)), den)
    return rational_from_decimal(s)


def to_rational(x: Union[int, str, Fraction]) -> Fraction:
    """Coerce ints, Fractions and numeral strings; floats are refused."""
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError("floating-point values are not accepted; pass a string or Fraction")
    if isinstance(x, str):
        return parse_rational(x)
    return Fraction(x)


def floor_div(y: Fraction, d: Fraction) -> int:
    """Largest integer ``k`` with ``k*d <= y``; requires ``d > 0``."""
    if d <= 0:
        raise DomainError("floor_div requires a positive divisor")
    q = Fraction(y) / Fraction(d)
    return q.numerator // q.denominator


def frac_part(x: Fraction) -> Fraction:
    """``x - floor(x)``, always in ``[0, 1)``."""
    return x - (x.numerator // x.denominator)


def format_fixed(x: Fraction, frac_digits: int) -> str:
    """Render ``x`` with exactly ``frac_digits`` fractional digits.

    Rounding is half-to-even, so the rendered value differs from ``x`` by at
    most ``0.5 * 10**-frac_digits``.
    """
    if frac_digits < 0:
        raise DomainError("frac_digits must be non-negative")
    scaled = round(Fraction(x) * 10**frac_digits)  # half-even on Fraction
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(frac_digits + 1, "0")
    if frac_digits == 0:
        return sign + digits
    return f"{sign}{digits[:-frac_digits]}.{digits[-frac_digits:]}"


def format_rational(x: Fraction) -> str:
    """``num/den`` form used by the JSON interchange format."""
    return f"{x.numerator}/{x.denominator}"


def pow10(k: int) -> Fraction:
    """``10**k`` as an exact rational, for any integer ``k``."""
    return Fraction(10**k) if k >= 0 else Fraction(1, 10**-k)
