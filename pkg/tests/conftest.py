import random
from fractions import Fraction

import mpmath
import pytest

from certrig import pi_engine
from certrig.piecewise import global_m


def mp_value(x: Fraction, dps: int):
    with mpmath.workdps(dps):
        return mpmath.mpf(x.numerator) / x.denominator


def mp_sin(x: Fraction, dps: int = 120):
    """Second, independent reference (mpmath) for spot checks."""
    with mpmath.workdps(dps):
        return mpmath.sin(mpmath.mpf(x.numerator) / x.denominator)


def mp_cos(x: Fraction, dps: int = 120):
    with mpmath.workdps(dps):
        return mpmath.cos(mpmath.mpf(x.numerator) / x.denominator)


def close(value: Fraction, ref, tol: Fraction, dps: int = 120) -> bool:
    with mpmath.workdps(dps):
        return abs(mp_value(value, dps) - ref) < mp_value(Fraction(tol), dps)


def random_rational(rng: random.Random, lo: Fraction, hi: Fraction, max_den: int = 10**4) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(int(lo * den), int(hi * den)), den)


def random_nonzero(rng: random.Random, lo, hi, max_den: int = 10**4) -> Fraction:
    while True:
        y = random_rational(rng, Fraction(lo), Fraction(hi), max_den)
        if y:
            return y


def narrow_branch_interval(k: int = 3, r_start: int = 5):
    """An interval ``[a, b]`` whose left generating point lands one multiple
    past the right one.

    ``b = (k + 1/2) p'`` exactly, so ``b`` sits on a half-integer of ``y/p'``
    and keeps multiple ``k``; when ``p' > pi/2`` the true half-integer is
    below ``b`` and an ``a`` squeezed in between refines to ``k + 1``.
    """
    for r in range(r_start, r_start + 60):
        m = global_m(Fraction(k) * 2, r)
        pprime = pi_engine.valp(m + 2).value
        p_ref = pi_engine.valp(m + 60).value
        if pprime <= p_ref:
            continue
        b = (k + Fraction(1, 2)) * pprime
        if global_m(b, r) != m:
            continue
        a = (k + Fraction(1, 2)) * (pprime + p_ref) / 2
        return a, b, r
    raise RuntimeError("no suitable precision found")


@pytest.fixture
def rng():
    return random.Random(20261016)
