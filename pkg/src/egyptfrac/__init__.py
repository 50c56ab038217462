"""Egyptian fractions, Z2/Z3 digit-vector linearity, and the Sierpinski and
hexagon-snowflake fractals, all in exact arithmetic."""

from .digitvec import DigitVec2, DigitVec3, agreement, is_disjoint, vec_add2, vec_add3, vec_scale3
from .egyptian import (
    EgyptianFraction,
    add_general,
    check_linear_z2,
    check_linear_z3,
    from_digits,
    greedy_expand,
    sigma,
    sub_general,
)
from .exact import Rational, parse_rational
from .fractal import Point, sierpinski_member, snowflake_member

__version__ = "0.1.0"

__all__ = [
    "DigitVec2",
    "DigitVec3",
    "EgyptianFraction",
    "Point",
    "Rational",
    "add_general",
    "agreement",
    "check_linear_z2",
    "check_linear_z3",
    "from_digits",
    "greedy_expand",
    "is_disjoint",
    "parse_rational",
    "sierpinski_member",
    "sigma",
    "snowflake_member",
    "sub_general",
    "vec_add2",
    "vec_add3",
    "vec_scale3",
]
