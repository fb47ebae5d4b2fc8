"""Certified evaluation of sin and cos at rational points.

The argument is reduced by the multiple ``k0`` of p = pi/2 nearest to it,
using a decimal approximation ``p'`` of p that is refined one digit at a
time until the position of ``y/p'`` inside its unit cell provably matches
that of ``y/p``.  All comparisons are exact rational comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from . import pi_engine
from .errors import DomainError, NonTerminationError
from .exactnum import frac_part, pow10
from .taylor import cos_taylor, min_degree, remainder_bound, sin_taylor

HALF = Fraction(1, 2)
THREE_HALVES = Fraction(3, 2)
# lower bound on p*p' valid for every p' with at least three digits
PP_LOWER = Fraction(12, 5)
FOUR_FIFTHS = Fraction(4, 5)
MAX_REFINEMENT = 200


@dataclass(frozen=True)
class Reduction:
    """Result of reducing ``y`` for target accuracy ``10**-r``.

    ``pprime`` is ``valp(m + 2)``; ``t`` is the fractional part of
    ``y / pprime``; ``n`` is the Taylor degree that makes the remainder at
    ``y - k0*pprime`` smaller than ``10**-(r+1)``.
    """

    pprime: Fraction
    m: int
    k0: int
    n: int
    t: Fraction

    @property
    def digits(self) -> int:
        return self.m + 2

    def reduced(self, y: Fraction) -> Fraction:
        return Fraction(y) - self.k0 * self.pprime


def initial_m(y: Fraction, r: int) -> int:
    """Smallest ``m >= r+1`` with ``10**-m <= 1 / ((|y|/1.5 + 1) 10**(r+1))``."""
    y = Fraction(y)
    if y == 0:
        raise DomainError("y must be nonzero")
    if r < 1:
        raise DomainError("r must be >= 1")
    target = 1 / ((abs(y) / THREE_HALVES + 1) * pow10(r + 1))
    m = r + 1
    while target < pow10(-m):
        m += 1
    return m


def stability_margin(t: Fraction) -> Fraction:
    """Distance of ``t`` from the nearest of 0, 1/2, 1 (``t`` in (0,1), not 1/2)."""
    t = Fraction(t)
    if not 0 < t < 1 or t == HALF:
        raise DomainError("stability_margin needs 0 < t < 1 and t != 1/2")
    if t < HALF:
        return min(t, HALF - t)
    return min(1 - t, t - HALF)


def select_k0(y: Fraction, m: int, max_extra: int = MAX_REFINEMENT) -> Tuple[Fraction, int, int, Fraction]:
    """Refine ``p' = valp(m+2)`` from digit parameter ``m`` upward and pick ``k0``.

    Returns ``(p', m_final, k0, t)``.
    """
    y = Fraction(y)
    y_abs = abs(y)
    cap = m + max_extra
    while True:
        pprime = pi_engine.valp(m + 2).value
        q = y / pprime
        fl = q.numerator // q.denominator
        t = q - fl
        if t == HALF:
            return pprime, m, fl, t
        scaled = PP_LOWER * pow10(m)
        if 0 < t < HALF and scaled * min(t, HALF - t) >= y_abs:
            return pprime, m, fl, t
        if t > HALF and scaled * min(1 - t, t - HALF) >= y_abs:
            return pprime, m, fl + 1, t
        m += 1
        if m > cap:
            raise NonTerminationError(f"argument reduction for y={y} did not settle by m={cap}")


def reduce(y: Fraction, r: int) -> Reduction:
    """Choose ``p'``, ``k0`` and the Taylor degree ``n`` for ``y != 0``."""
    y = Fraction(y)
    m0 = initial_m(y, r)
    pprime, m, k0, t = select_k0(y, m0)
    u = abs(y - k0 * pprime)
    n = min_degree(lambda j: remainder_bound(u, j), pow10(-(r + 1)))
    return Reduction(pprime=pprime, m=m, k0=k0, n=n, t=t)


def _sin_from_reduction(red: Reduction, y: Fraction) -> Fraction:
    u = red.reduced(y)
    k0 = red.k0
    if k0 % 2 == 0:
        return (-1) ** ((k0 // 2) % 2) * sin_taylor(red.n)(u)
    return (-1) ** (((k0 - 1) // 2) % 2) * cos_taylor(red.n)(u)


def _cos_from_reduction(red: Reduction, y: Fraction) -> Fraction:
    u = red.reduced(y)
    k0 = red.k0
    if k0 % 2 == 0:
        return (-1) ** ((k0 // 2) % 2) * cos_taylor(red.n)(u)
    return (-1) ** (((k0 + 1) // 2) % 2) * sin_taylor(red.n)(u)


def sin_point(y: Fraction, r: int) -> Fraction:
    """Rational within ``10**-r`` of ``sin(y)``."""
    y = Fraction(y)
    return _sin_from_reduction(reduce(y, r), y)


def cos_point(y: Fraction, r: int) -> Fraction:
    """Rational within ``10**-r`` of ``cos(y)``."""
    y = Fraction(y)
    return _cos_from_reduction(reduce(y, r), y)


def sin_point_proxy(y_proxy: Fraction, r: int) -> Fraction:
    """Evaluate at a rational stand-in for an irrational argument.

    The caller guarantees ``|y_true - y_proxy| < 10**-(r+1)``; evaluating the
    proxy to ``10**-(r+1)`` then keeps the total error below ``10**-r``.
    """
    return sin_point(y_proxy, r + 1)


def pi_over_k_proxy(k: int, r: int) -> Fraction:
    """``(2/k) valp(r+3)``, a rational within ``10**-(r+1)`` of ``pi/k``."""
    if k < 2:
        raise DomainError("k must be >= 2")
    return Fraction(2, k) * pi_engine.valp(r + 3).value


def sin_pi_over_k(k: int, r: int) -> Fraction:
    """Rational within ``10**-r`` of ``sin(pi/k)``."""
    if r < 1:
        raise DomainError("r must be >= 1")
    return sin_point_proxy(pi_over_k_proxy(k, r), r)
