"""Taylor polynomials of sin and cos about 0 and remainder-driven degree search."""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Callable, List, Sequence

from .errors import DomainError, NonTerminationError

MAX_DEGREE = 10000

_fact_lock = threading.Lock()
_factorials: List[int] = [1]


def factorial(k: int) -> int:
    """``k!`` from an append-only table shared by all callers."""
    if k < 0:
        raise DomainError("factorial of a negative integer")
    with _fact_lock:
        while len(_factorials) <= k:
            _factorials.append(_factorials[-1] * len(_factorials))
        return _factorials[k]


class Polynomial:
    """Dense polynomial with exact rational coefficients, lowest degree first."""

    __slots__ = ("coeffs", "_int_form")

    def __init__(self, coeffs: Sequence[Fraction]) -> None:
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)
        self._int_form = None

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def _integer_form(self):
        # coefficients over one common denominator: p(x) = sum(ints[i] x^i) / den
        if self._int_form is None:
            den = 1
            for c in self.coeffs:
                den = lcm(den, c.denominator)
            ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
            self._int_form = (ints, den)
        return self._int_form

    def __call__(self, x: Fraction) -> Fraction:
        """Exact value at ``x`` (Horner's rule on integers, one reduction at the end)."""
        if not self.coeffs:
            return Fraction(0)
        x = Fraction(x)
        ints, den = self._integer_form()
        num_x, den_x = x.numerator, x.denominator
        n = len(ints) - 1
        acc = ints[n]
        dpow = 1
        for i in range(n - 1, -1, -1):
            dpow *= den_x
            acc = acc * num_x + ints[i] * dpow
        return Fraction(acc, den * den_x**n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def shifted(self, c: Fraction) -> "Polynomial":
        """The polynomial ``x -> self(x - c)`` expanded in powers of ``x``."""
        out = [Fraction(0)] * len(self.coeffs)
        # Horner on polynomials: acc = acc*(x - c) + a_i
        for a in reversed(self.coeffs):
            nxt = [Fraction(0)] * len(out)
            for j, v in enumerate(out):
                if v:
                    if j + 1 < len(nxt):
                        nxt[j + 1] += v
                    nxt[j] -= c * v
            nxt[0] += a
            out = nxt
        return Polynomial(out)


def evaluate(poly: Polynomial, x: Fraction) -> Fraction:
    return poly(x)


@lru_cache(maxsize=None)
def sin_taylor(n: int) -> Polynomial:
    """``P_n``: odd terms ``(-1)^m y^(2m+1)/(2m+1)!`` for ``m <= (n-1)//2``."""
    if n < 0:
        raise DomainError("Taylor order must be non-negative")
    coeffs = [Fraction(0)] * (n + 1)
    for m in range((n - 1) // 2 + 1):
        coeffs[2 * m + 1] = Fraction((-1) ** m, factorial(2 * m + 1))
    return Polynomial(coeffs)


@lru_cache(maxsize=None)
def cos_taylor(n: int) -> Polynomial:
    """``Q_n``: even terms ``(-1)^m y^(2m)/(2m)!`` for ``m <= n//2``."""
    if n < 0:
        raise DomainError("Taylor order must be non-negative")
    coeffs = [Fraction(0)] * (n + 1)
    for m in range(n // 2 + 1):
        coeffs[2 * m] = Fraction((-1) ** m, factorial(2 * m))
    return Polynomial(coeffs)


def remainder_bound(y_abs: Fraction, n: int) -> Fraction:
    """Lagrange bound ``|y|^(n+1)/(n+1)!`` for both ``P_n`` and ``Q_n``."""
    if y_abs < 0 or n < 0:
        raise DomainError("remainder_bound needs y_abs >= 0 and n >= 0")
    return Fraction(y_abs) ** (n + 1) / factorial(n + 1)


def min_degree(bound: Callable[[int], Fraction], threshold: Fraction, cap: int = MAX_DEGREE) -> int:
    """Smallest ``n >= 0`` with ``bound(n) < threshold``."""
    n = 0
    while bound(n) >= threshold:
        n += 1
        if n > cap:
            raise NonTerminationError(f"no degree <= {cap} meets the threshold")
    return n
