"""Exact rational arithmetic.

``Rational`` is :class:`fractions.Fraction`: it already normalizes to lowest
terms with a positive denominator, is immutable, and sits on Python's
arbitrary-precision ints.  The functions here give the rest of the package a
small, explicit surface plus the ``p/q`` text form.
"""

from __future__ import annotations

import re
from enum import Enum
from fractions import Fraction

from .errors import ParseError

Rational = Fraction

__all__ = [
    "Ordering",
    "Rational",
    "format_rational",
    "parse_rational",
    "rat_add",
    "rat_cmp",
    "rat_mul",
]


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def rat_add(a: Rational, b: Rational) -> Rational:
    return Fraction(a) + Fraction(b)


def rat_mul(a: Rational, b: Rational) -> Rational:
    return Fraction(a) * Fraction(b)


def rat_cmp(a: Rational, b: Rational) -> Ordering:
    # cross-multiplication on canonical forms; denominators are positive
    a, b = Fraction(a), Fraction(b)
    lhs = a.numerator * b.denominator
    rhs = b.numerator * a.denominator
    if lhs < rhs:
        return Ordering.LESS
    if lhs > rhs:
        return Ordering.GREATER
    return Ordering.EQUAL


_RATIONAL_RE = re.compile(r"(-?)(\d+)(?:/(\d+))?")


def parse_rational(text: str) -> Rational:
    """Parse ``"p/q"``, ``"-p/q"`` or a bare integer ``"p"``."""
    s = text.strip()
    m = _RATIONAL_RE.fullmatch(s)
    if m is None:
        # locate the first offending character for the diagnostic
        pos = 0
        if s.startswith("-"):
            pos = 1
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if pos < len(s) and s[pos] == "/":
            pos += 1
            while pos < len(s) and s[pos].isdigit():
                pos += 1
        raise ParseError("malformed rational", text, pos)
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ParseError("zero denominator", text, s.index("/") + 1)
    value = Fraction(int(num), int(den) if den is not None else 1)
    return -value if sign else value


def format_rational(x: Rational) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
