"""Certified polynomial approximation of sin and cos at rational arguments."""

from .altschemes import degree_table, eps1, eps2, omega1, sin_point_triple
from .errors import CertrigError, DomainError, NonTerminationError, ParseError
from .exactnum import Rational, floor_div, format_fixed, parse_rational, rational_from_decimal
from .pi_engine import PiApprox, pi_digits, valp
from .piecewise import PiecewiseApprox, Piece, eval_piecewise, piecewise_cos, piecewise_sin
from .pointwise import Reduction, cos_point, reduce, sin_pi_over_k, sin_point
from .taylor import Polynomial, cos_taylor, sin_taylor
from .verify import max_error_scan, oracle_cos, oracle_sin

__version__ = "0.1.0"
