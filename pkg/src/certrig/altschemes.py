"""Triple-angle approximation schemes and their error bounds.

The compositions evaluate Taylor polynomials at ``y/3`` (and ``2y/3``) and
recombine them with the triple-angle identities, which lowers the degree of
the polynomial that has to be evaluated for a given accuracy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, NamedTuple

from .errors import DomainError
from .exactnum import pow10
from .pointwise import FOUR_FIFTHS, initial_m, select_k0
from .taylor import cos_taylor, factorial, min_degree, remainder_bound, sin_taylor


def eps0(y_abs: Fraction, n: int) -> Fraction:
    """Plain Taylor remainder bound, used with ``y_abs = 4/5`` for piecewise degrees."""
    return remainder_bound(Fraction(y_abs), n)


def eps1(y_abs: Fraction, n: int) -> Fraction:
    """Error bound of ``3 P_n(y/3) - 4 P_n(y/3)^3``."""
    y = Fraction(y_abs)
    d = 3 ** (n + 1) * factorial(n + 1)
    return (
        4 * (y ** (3 * n + 3) / d**3 + y ** (2 * n + 3) / d**2)
        + (Fraction(4, 3) * y**2 + 3) * y ** (n + 1) / d
    )


def eps2(y_abs: Fraction, n: int) -> Fraction:
    """Error bound of ``P_n(y/3) (1 + 2 Q_n(2y/3))``."""
    y = Fraction(y_abs)
    f = factorial(n + 1)
    two_thirds = Fraction(2, 3) ** (n + 2)
    return (
        Fraction(1, 3**n) * two_thirds * y ** (2 * n + 2) / f**2
        + y ** (n + 1) / (3**n * f)
        + two_thirds * y ** (n + 2) / f
    )


def omega1(y_abs: Fraction, n: int) -> Fraction:
    """Error bound of ``4 Q_n(y/3)^3 - 3 Q_n(y/3)``."""
    y = Fraction(y_abs)
    d = 3 ** (n + 1) * factorial(n + 1)
    return (
        4 * (y ** (3 * n + 3) / d**3 + 3 * y ** (2 * n + 2) / d**2)
        + 5 * y ** (n + 1) / (3**n * factorial(n + 1))
    )


SCHEMES: Dict[str, Callable[[Fraction, int], Fraction]] = {
    "eps0": eps0,
    "eps1": eps1,
    "eps2": eps2,
    "omega1": omega1,
}


@dataclass(frozen=True)
class SchemeBound:
    scheme: str
    y_abs: Fraction
    n: int
    value: Fraction

    @classmethod
    def compute(cls, scheme: str, y_abs: Fraction, n: int) -> "SchemeBound":
        if scheme not in SCHEMES:
            raise DomainError(f"unknown scheme {scheme!r}")
        y_abs = Fraction(y_abs)
        return cls(scheme, y_abs, n, SCHEMES[scheme](y_abs, n))


def scheme_degree(scheme: str, y_abs: Fraction, r: int) -> int:
    """Smallest ``n`` whose bound at ``y_abs`` is below ``10**-(r+1)``."""
    bound = SCHEMES[scheme]
    y_abs = Fraction(y_abs)
    return min_degree(lambda n: bound(y_abs, n), pow10(-(r + 1)))


def _check_small(y: Fraction) -> Fraction:
    y = Fraction(y)
    if abs(y) >= 1:
        raise DomainError("the triple-angle compositions need |y| < 1")
    return y


def small_sin_34(y: Fraction, n: int) -> Fraction:
    y = _check_small(y)
    s = sin_taylor(n)(y / 3)
    return 3 * s - 4 * s**3


def small_sin_35(y: Fraction, n: int) -> Fraction:
    y = _check_small(y)
    return sin_taylor(n)(y / 3) * (1 + 2 * cos_taylor(n)(2 * y / 3))


def small_cos_40(y: Fraction, n: int) -> Fraction:
    y = _check_small(y)
    c = cos_taylor(n)(y / 3)
    return 4 * c**3 - 3 * c


def sin_point_triple(y: Fraction, r: int) -> Fraction:
    """Same reduction as :func:`pointwise.sin_point`, lower-degree evaluation."""
    y = Fraction(y)
    pprime, _, k0, _ = select_k0(y, initial_m(y, r))
    u = y - k0 * pprime
    if k0 % 2 == 0:
        n = scheme_degree("eps1", abs(u), r)
        a = sin_taylor(n)(u / 3)
        return (-1) ** ((k0 // 2) % 2) * (3 * a - 4 * a**3)
    n = scheme_degree("omega1", abs(u), r)
    b = cos_taylor(n)(u / 3)
    return (-1) ** (((k0 - 1) // 2) % 2) * (4 * b**3 - 3 * b)


class DegreeRow(NamedTuple):
    r: int
    n_eps1: int
    deg_eps1: int
    n_eps2: int
    deg_eps2: int
    n_eps0: int


def degree_table(rs: Iterable[int]) -> List[DegreeRow]:
    """Minimal degrees at ``y = 4/5`` for each scheme and accuracy ``10**-r``."""
    rows = []
    for r in rs:
        if r < 1:
            raise DomainError("r must be >= 1")
        n1 = scheme_degree("eps1", FOUR_FIFTHS, r)
        n2 = scheme_degree("eps2", FOUR_FIFTHS, r)
        n0 = scheme_degree("eps0", FOUR_FIFTHS, r)
        rows.append(DegreeRow(r, n1, 3 * n1, n2, 2 * n2, n0))
    return rows
