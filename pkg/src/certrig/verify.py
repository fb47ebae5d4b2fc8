"""High-precision reference values for sin/cos and error scans.

The oracle does not use the digit-selection logic of the pointwise
algorithm.  It reduces ``|y|`` by the nearest multiple of an oversized
approximation of pi/2, sums the Taylor series in scaled integers and adds up
every error source explicitly; if the total is not below the requested
tolerance the guard digits are doubled and the work is redone.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from . import pi_engine
from .errors import DomainError
from .exactnum import pow10


@dataclass(frozen=True)
class OracleConfig:
    target_digits: int
    guard_digits: int = 30


def _series(z_abs: int, scale: int, odd: bool) -> Tuple[int, int]:
    """Scaled sin (``odd``) or cos of ``z_abs/scale``; returns ``(value, err_ulps)``."""
    s2 = scale * scale
    z2 = z_abs * z_abs
    if odd:
        term, j = z_abs, 1
    else:
        term, j = scale, 0
    total = term
    sign = -1
    n_terms = 1
    while term:
        term = term * z2 // (s2 * (j + 1) * (j + 2))
        j += 2
        total += sign * term
        sign = -sign
        n_terms += 1
    # each term carries < 2 ulps of accumulated truncation; the tail is < 3 ulps
    return total, 2 * n_terms + 3


def _oracle(y: Fraction, digits: int, guard: int, want_sin: bool) -> Fraction:
    a = abs(Fraction(y))
    tol = pow10(-digits) / 2
    while True:
        frac_digits = digits + guard
        scale = 10**frac_digits
        int_digits = len(str(a.numerator // a.denominator)) + 1
        half_pi = pi_engine.valp(frac_digits + int_digits + 1)
        k = round(a / half_pi.value)
        z = a - k * half_pi.value
        z_scaled = round(z * scale)
        quadrant = k % 4
        # sin(z + k*pi/2) / cos(z + k*pi/2) in terms of sin z, cos z
        if want_sin:
            use_sin, negate = quadrant in (0, 2), quadrant in (2, 3)
        else:
            use_sin, negate = quadrant in (1, 3), quadrant in (1, 2)
        value, ulps = _series(abs(z_scaled), scale, odd=use_sin)
        if use_sin and z_scaled < 0:
            value = -value
        err = k * half_pi.err_bound + Fraction(2 * ulps + 1, 2 * scale)
        if err < tol:
            break
        guard *= 2
    result = Fraction(-value if negate else value, scale)
    if want_sin and y < 0:
        result = -result
    return result


def oracle_sin(y: Fraction, digits: int, guard_digits: int = 30) -> Fraction:
    """Rational within ``10**-digits`` of ``sin(y)``."""
    if digits < 1:
        raise DomainError("digits must be >= 1")
    if y == 0:
        return Fraction(0)
    return _oracle(Fraction(y), digits, guard_digits, want_sin=True)


def oracle_cos(y: Fraction, digits: int, guard_digits: int = 30) -> Fraction:
    """Rational within ``10**-digits`` of ``cos(y)``; exactly even in ``y``."""
    if digits < 1:
        raise DomainError("digits must be >= 1")
    if y == 0:
        return Fraction(1)
    return _oracle(abs(Fraction(y)), digits, guard_digits, want_sin=False)


def oracle(func: str, y: Fraction, digits: int) -> Fraction:
    if func == "sin":
        return oracle_sin(y, digits)
    if func == "cos":
        return oracle_cos(y, digits)
    raise DomainError(f"unknown function {func!r}")


def sample_points(a: Fraction, b: Fraction, samples: int) -> List[Fraction]:
    """``samples`` equispaced rationals from ``a`` to ``b`` inclusive."""
    if samples < 2:
        raise DomainError("need at least 2 samples")
    step = (Fraction(b) - Fraction(a)) / (samples - 1)
    return [Fraction(a) + i * step for i in range(samples)]


def _chunk_errors(args) -> Fraction:
    approx, xs = args
    digits = approx.r + 5
    worst = Fraction(0)
    for x in xs:
        worst = max(worst, abs(approx(x) - oracle(approx.func, x, digits)))
    return worst


def max_error_scan(approx, samples: int, jobs: int = 1) -> Fraction:
    """Largest observed ``|F(x) - f(x)|`` over equispaced samples of ``[a, b]``.

    The reference is the oracle at ``r + 5`` digits.  With ``jobs > 1`` the
    samples are split across processes; the reduction is an exact max, so
    the answer does not depend on ``jobs``.
    """
    xs = sample_points(approx.a, approx.b, samples)
    if jobs <= 1:
        return _chunk_errors((approx, xs))
    chunks: Sequence = [xs[i::jobs] for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return max(pool.map(_chunk_errors, [(approx, c) for c in chunks if c]))
