"""Piecewise polynomial approximants of sin and cos on a rational interval.

Each piece is a Taylor polynomial of fixed degree in the shifted variable
``u = x - k*p'`` where ``k*p'`` is a rational multiple of an approximation of
pi/2.  Consecutive generating points ``(k+1)*p'`` walk the interval to the
right until the multiple assigned to the right endpoint ``b`` is reached.
Negative arguments are handled by reflection (odd for sin, even for cos).
"""

from __future__ import annotations

import json
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from .errors import DomainError
from .exactnum import format_rational, parse_rational, pow10
from .pointwise import FOUR_FIFTHS, HALF, select_k0
from .taylor import Polynomial, cos_taylor, min_degree, remainder_bound, sin_taylor

FUNCS = ("sin", "cos")
# generating points seed their own refinement from the shared digit parameter;
# each point typically needs a couple more digits than the previous one
MAX_LOCAL_REFINEMENT = 2000


@dataclass(frozen=True)
class Piece:
    """``value(x) = sign * poly(x - center)`` on ``[lo, hi]``.

    ``kind`` is ``"P"`` for a sine Taylor polynomial and ``"Q"`` for a
    cosine one.
    """

    lo: Fraction
    hi: Fraction
    center: Fraction
    poly: Polynomial
    sign: int
    kind: str

    def __call__(self, x: Fraction) -> Fraction:
        v = self.poly(Fraction(x) - self.center)
        return v if self.sign > 0 else -v


@dataclass(frozen=True)
class Generator:
    """Diagnostic record of one generating point and what it produced."""

    y: Fraction
    pprime: Fraction
    k0: int


@dataclass(frozen=True)
class PiecewiseApprox:
    func: str
    r: int
    a: Fraction
    b: Fraction
    pieces: Tuple[Piece, ...]
    m_global: int
    generators: Tuple[Generator, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_los", [p.lo for p in self.pieces])
        object.__setattr__(self, "_his", [p.hi for p in self.pieces])

    def __len__(self) -> int:
        return len(self.pieces)

    def __call__(self, x: Fraction) -> Fraction:
        return eval_piecewise(self, x)

    @property
    def breakpoints(self) -> List[Fraction]:
        """``a``, every interior boundary, then ``b``."""
        return [p.lo for p in self.pieces] + [self.pieces[-1].hi]

    def locate(self, x: Fraction) -> Piece:
        x = Fraction(x)
        if x < self.a or x > self.b:
            raise DomainError(f"{x} lies outside [{self.a}, {self.b}]")
        if x < 0:
            # mirror image of the [lo, hi) rule, so reflected pieces own the same points
            idx = max(bisect_left(self._his, x), 0)
        else:
            idx = max(bisect_right(self._los, x) - 1, 0)
        return self.pieces[idx]

    def to_json(self) -> dict:
        return {
            "func": self.func,
            "r": self.r,
            "a": format_rational(self.a),
            "b": format_rational(self.b),
            "m_global": self.m_global,
            "pieces": [
                {
                    "lo": format_rational(p.lo),
                    "hi": format_rational(p.hi),
                    "center": format_rational(p.center),
                    "sign": p.sign,
                    "kind": p.kind,
                    "coeffs": [format_rational(c) for c in p.poly.coeffs],
                }
                for p in self.pieces
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict) -> "PiecewiseApprox":
        polys: dict = {}
        pieces = []
        for d in data["pieces"]:
            key = tuple(d["coeffs"])
            if key not in polys:
                polys[key] = Polynomial([parse_rational(c) for c in key])
            pieces.append(
                Piece(
                    lo=parse_rational(d["lo"]),
                    hi=parse_rational(d["hi"]),
                    center=parse_rational(d["center"]),
                    poly=polys[key],
                    sign=int(d["sign"]),
                    kind=d["kind"],
                )
            )
        return cls(
            func=data["func"],
            r=int(data["r"]),
            a=parse_rational(data["a"]),
            b=parse_rational(data["b"]),
            pieces=tuple(pieces),
            m_global=int(data.get("m_global", -1)),
        )

    @classmethod
    def loads(cls, text: str) -> "PiecewiseApprox":
        return cls.from_json(json.loads(text))


def eval_piecewise(approx: PiecewiseApprox, x: Fraction) -> Fraction:
    """Value of the piece containing ``x``.

    For ``x >= 0`` pieces are ``[lo, hi)``, for ``x < 0`` they are ``(lo, hi]``;
    the outer endpoints ``a`` and ``b`` belong to the first and last piece.
    """
    return approx.locate(x)(x)


def piecewise_degree(r: int) -> int:
    """Degree that makes every piece accurate on a radius-4/5 neighbourhood."""
    return min_degree(lambda n: remainder_bound(FOUR_FIFTHS, n), pow10(-(r + 1)))


def global_m(b: Fraction, r: int) -> int:
    """Smallest ``m >= r+1`` with ``10**-m <= 1/((2b+4) 10**(r+1))``."""
    target = 1 / ((2 * Fraction(b) + 4) * pow10(r + 1))
    m = r + 1
    while target < pow10(-m):
        m += 1
    return m


def _template(func: str, k0: int, pprime: Fraction, n: int) -> Piece:
    center = k0 * pprime
    half = pprime / 2
    if func == "sin":
        if k0 % 2 == 0:
            poly, kind, sign = sin_taylor(n), "P", (-1) ** ((k0 // 2) % 2)
        else:
            poly, kind, sign = cos_taylor(n), "Q", (-1) ** (((k0 - 1) // 2) % 2)
    else:
        if k0 % 2 == 0:
            poly, kind, sign = cos_taylor(n), "Q", (-1) ** ((k0 // 2) % 2)
        else:
            poly, kind, sign = sin_taylor(n), "P", (-1) ** (((k0 + 1) // 2) % 2)
    return Piece(center - half, center + half, center, poly, sign, kind)


def intv_approx(y: Fraction, m: int, r: int, func: str = "sin") -> Tuple[Fraction, int, Piece]:
    """Map a generating point to ``(p', k0, piece)``.

    ``m`` is the shared digit parameter; if the floor test fails at that
    precision the point refines its own ``p'`` further.  The returned piece
    covers ``[(k0 - 1/2) p', (k0 + 1/2) p']``.
    """
    y = Fraction(y)
    if y == 0:
        raise DomainError("generating point must be nonzero")
    if func not in FUNCS:
        raise DomainError(f"unknown function {func!r}")
    pprime, _, k0, _ = select_k0(y, m, max_extra=MAX_LOCAL_REFINEMENT)
    return pprime, k0, _template(func, k0, pprime, piecewise_degree(r))


IntvFn = Callable[[Fraction], Tuple[Fraction, int, Piece]]


def _walk(a: Fraction, b: Fraction, intv: IntvFn) -> Tuple[List[Tuple[Fraction, Fraction, Piece]], List[Generator]]:
    """Cover ``[a, b]`` (``4/5 <= a < b``); returns ``(lo, hi, template)`` triples."""
    q0, n0, b0 = intv(b)
    p0, k0, a0 = intv(a)
    gens = [Generator(a, p0, k0)]
    if n0 <= k0:
        return [(a, b, a0)], gens + [Generator(b, q0, n0)]
    chain = [(p0, k0, a0)]
    while chain[-1][1] < n0:
        p, k, _ = chain[-1]
        y = (k + 1) * p
        nxt = intv(y)
        gens.append(Generator(y, nxt[0], nxt[1]))
        chain.append(nxt)
    gens.append(Generator(b, q0, n0))
    last = len(chain) - 1
    brk = [(k + HALF) * p for p, k, _ in chain[:last]]
    p_prev, k_prev, _ = chain[last - 1]
    half_end = brk[last - 1]
    full_end = (k_prev + 1) * p_prev
    templates = [t for _, _, t in chain]
    if b <= half_end:
        bounds = [a] + brk[: last - 1] + [b]
        used = templates[:last]
    elif b <= full_end:
        bounds = [a] + brk + [b]
        used = templates
    else:
        bounds = [a] + brk + [full_end, b]
        used = templates + [b0]
    spans = [(lo, hi, t) for lo, hi, t in zip(bounds, bounds[1:], used) if lo != hi]
    for lo, hi, _ in spans:
        if not lo < hi:
            raise RuntimeError("piece boundaries are not increasing")
    return spans, gens


def _positive(a: Fraction, b: Fraction, r: int, func: str, intv: Optional[IntvFn] = None):
    """Pieces for ``0 <= a < b``; returns ``(pieces, m, generators)``."""
    m = global_m(b, r)
    n = piecewise_degree(r)
    if intv is None:
        def intv(y: Fraction) -> Tuple[Fraction, int, Piece]:
            return intv_approx(y, m, r, func)
    pieces: List[Piece] = []
    start = a
    if a < FOUR_FIFTHS:
        poly, kind = (sin_taylor(n), "P") if func == "sin" else (cos_taylor(n), "Q")
        end = min(b, FOUR_FIFTHS)
        pieces.append(Piece(a, end, Fraction(0), poly, 1, kind))
        if b <= FOUR_FIFTHS:
            return pieces, m, []
        start = FOUR_FIFTHS
    spans, gens = _walk(start, b, intv)
    for lo, hi, t in spans:
        pieces.append(replace(t, lo=lo, hi=hi))
    return pieces, m, gens


def _reflect(pieces: Sequence[Piece], func: str) -> List[Piece]:
    """Mirror pieces built on ``[-b, -a]`` onto ``[a, b]``.

    For sin the mirrored piece is ``-A(-x)``, for cos it is ``A(-x)``; with
    an odd (``P``) or even (``Q``) polynomial that only flips the center and
    possibly the sign.
    """
    out = []
    for p in reversed(pieces):
        flip = (p.kind == "Q") if func == "sin" else (p.kind == "P")
        out.append(Piece(-p.hi, -p.lo, -p.center, p.poly, -p.sign if flip else p.sign, p.kind))
    return out


def _mirror_gens(gens: Sequence[Generator]) -> List[Generator]:
    return [Generator(-g.y, g.pprime, -g.k0) for g in reversed(gens)]


def _build(a, b, r: int, func: str, intv: Optional[IntvFn] = None) -> PiecewiseApprox:
    a, b = Fraction(a), Fraction(b)
    if func not in FUNCS:
        raise DomainError(f"unknown function {func!r}")
    if not a < b:
        raise DomainError("need a < b")
    if r < 1:
        raise DomainError("r must be >= 1")
    if a >= 0:
        pieces, m, gens = _positive(a, b, r, func, intv)
    elif b <= 0:
        pos, m, g = _positive(-b, -a, r, func, intv)
        pieces, gens = _reflect(pos, func), _mirror_gens(g)
    else:
        neg, m_neg, g_neg = _positive(Fraction(0), -a, r, func, intv)
        pos, m_pos, g_pos = _positive(Fraction(0), b, r, func, intv)
        pieces = _reflect(neg, func) + pos
        gens = _mirror_gens(g_neg) + g_pos
        m = max(m_neg, m_pos)
    return PiecewiseApprox(func, r, a, b, tuple(pieces), m, tuple(gens))


def piecewise_sin_pos(a, b, r: int) -> PiecewiseApprox:
    """Approximant of sin on ``[a, b]`` with ``0 <= a < b``."""
    if Fraction(a) < 0:
        raise DomainError("piecewise_sin_pos needs a >= 0")
    return _build(a, b, r, "sin")


def piecewise_sin(a, b, r: int) -> PiecewiseApprox:
    """Approximant of sin on any rational ``[a, b]`` accurate to ``10**-r``."""
    return _build(a, b, r, "sin")


def piecewise_cos(a, b, r: int) -> PiecewiseApprox:
    """Approximant of cos on any rational ``[a, b]`` accurate to ``10**-r``."""
    return _build(a, b, r, "cos")
