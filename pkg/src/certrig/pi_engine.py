"""Certified decimal approximations of pi and of p = pi/2.

Pi is evaluated with Machin's formula ``pi = 16 atan(1/5) - 4 atan(1/239)``
in scaled integer arithmetic.  Every truncating division contributes less
than one unit in the last place and the alternating tail is bounded by the
first omitted term, so each evaluation yields an enclosing interval
``[lo, hi]`` for pi.  Rounding to ``n`` significant digits is accepted only
when both ends of the interval round to the same value.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Tuple, Union

from .errors import DomainError

CACHE_ENV_VAR = "CERTRIG_PI_CACHE"

_GUARD_DIGITS = 12


@dataclass(frozen=True)
class PiApprox:
    """``value`` is p = pi/2 rounded to ``digits`` significant digits.

    ``err_bound`` is a certified bound on ``|pi/2 - value|``: the half-unit
    of the last digit, valid because rounding is only accepted once the
    enclosure of pi/2 rounds unambiguously.
    """

    digits: int
    value: Fraction
    err_bound: Fraction


def _atan_inv_scaled(x: int, scale: int) -> Tuple[int, int]:
    """Return ``(s, e)`` with ``|scale*atan(1/x) - s| <= e``.

    ``floor(floor(a)/b) == floor(a/b)`` for integer ``b``, so each power term
    equals ``floor(scale/x**(2k+1))`` exactly and each divided term is off by
    less than one unit.
    """
    x2 = x * x
    power = scale // x
    total = power
    k = 1
    n_terms = 1
    sign = -1
    while power:
        power //= x2
        term = power // (2 * k + 1)
        total += sign * term
        sign = -sign
        k += 1
        n_terms += 1
    # one unit per computed term plus one for the (sub-unit) tail
    return total, n_terms + 1


def _pi_interval(frac_digits: int) -> Tuple[int, int, int]:
    """Return ``(num, err, scale)``: pi lies within ``err/scale`` of ``num/scale``."""
    scale = 10 ** (frac_digits + _GUARD_DIGITS)
    a, ea = _atan_inv_scaled(5, scale)
    b, eb = _atan_inv_scaled(239, scale)
    return 16 * a - 4 * b, 16 * ea + 4 * eb, scale


class _PiCache:
    """Append-only memo of the most precise pi enclosure computed so far."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._frac_digits = 0
        self._lo = Fraction(3)
        self._hi = Fraction(4)

    def enclosure(self, frac_digits: int) -> Tuple[Fraction, Fraction]:
        """An interval containing pi with width at most ``10**-frac_digits``."""
        with self._lock:
            if frac_digits > self._frac_digits:
                target = max(frac_digits, self._frac_digits + self._frac_digits // 2)
                num, err, scale = _pi_interval(target)
                self._lo = Fraction(num - err, scale)
                self._hi = Fraction(num + err, scale)
                self._frac_digits = target
            return self._lo, self._hi

    @property
    def frac_digits(self) -> int:
        return self._frac_digits

    def seed(self, lo: Fraction, hi: Fraction, frac_digits: int) -> None:
        with self._lock:
            if frac_digits > self._frac_digits:
                self._lo, self._hi, self._frac_digits = lo, hi, frac_digits

    def clear(self) -> None:
        with self._lock:
            self._frac_digits = 0
            self._lo, self._hi = Fraction(3), Fraction(4)


_cache = _PiCache()
_valp_memo: dict = {}
_memo_lock = threading.Lock()


def _round_sig(lo: Fraction, hi: Fraction, n: int) -> Optional[Fraction]:
    """Common n-significant-digit rounding of ``lo`` and ``hi`` (both in [1, 10))."""
    q = 10 ** (n - 1)
    rlo = round(lo * q)
    rhi = round(hi * q)
    if rlo != rhi:
        return None
    return Fraction(rlo, q)


def _rounded(n: int, divisor: int) -> Fraction:
    """Round ``pi/divisor`` (which lies in [1, 10)) to ``n`` significant digits."""
    extra = 4
    while True:
        lo, hi = _cache.enclosure(n + extra)
        value = _round_sig(lo / divisor, hi / divisor, n)
        if value is not None:
            return value
        extra *= 2


def pi_digits(n: int) -> Fraction:
    """Pi rounded half-even to ``n`` significant digits (``n >= 2``)."""
    if n < 2:
        raise DomainError("pi_digits requires n >= 2")
    return _rounded(n, 1)


def valp(n: int) -> PiApprox:
    """p = pi/2 rounded half-even to ``n`` significant digits (``n >= 2``)."""
    if n < 2:
        raise DomainError("valp requires n >= 2")
    with _memo_lock:
        hit = _valp_memo.get(n)
    if hit is not None:
        return hit
    approx = PiApprox(n, _rounded(n, 2), Fraction(1, 2 * 10 ** (n - 1)))
    with _memo_lock:
        _valp_memo[n] = approx
    return approx


def clear_cache() -> None:
    """Forget all memoized digits (results are unaffected, only speed)."""
    _cache.clear()
    with _memo_lock:
        _valp_memo.clear()


def cached_digits() -> int:
    return _cache.frac_digits


def save_cache(path: Union[str, Path]) -> None:
    """Write the cached digits: first line the digit count ``D``, second line
    pi truncated to ``D`` fractional digits."""
    digits = _cache.frac_digits
    if digits == 0:
        return
    lo, hi = _cache.enclosure(digits)
    scale = 10**digits
    # floor(lo*scale) may differ from floor(hi*scale); keep only agreed digits
    while digits > 0 and (lo * scale).__floor__() != (hi * scale).__floor__():
        digits -= 1
        scale //= 10
    trunc = (lo * scale).__floor__()
    text = str(trunc)
    Path(path).write_text(f"{digits}\n{text[0]}.{text[1:]}\n")


def load_cache(path: Union[str, Path]) -> int:
    """Seed the cache from a file written by :func:`save_cache`.

    The first 30 digits are checked against a fresh computation; returns the
    number of digits loaded (0 if the file is missing or unusable).
    """
    p = Path(path)
    if not p.is_file():
        return 0
    try:
        head, body = p.read_text().split("\n", 2)[:2]
        digits = int(head)
        whole, frac = body.strip().split(".")
        if whole != "3" or len(frac) != digits:
            return 0
    except ValueError:
        return 0
    value = Fraction(int(whole + frac), 10**digits)
    check = min(digits, 30)
    num, err, scale = _pi_interval(check + 2)
    if not (Fraction(num - err, scale) - Fraction(1, 10**check) <= value <= Fraction(num + err, scale)):
        return 0
    _cache.seed(value, value + Fraction(1, 10**digits), digits)
    return digits


def cache_path_from_env() -> Optional[str]:
    return os.environ.get(CACHE_ENV_VAR) or None
