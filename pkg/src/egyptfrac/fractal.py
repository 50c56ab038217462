"""Exact membership oracles for the Sierpinski triangle and hexagon snowflake.

Approximants are closed sets.  ``S_n`` is built from the right triangle
``T0 = {x >= 0, y >= 0, x + y <= 1}`` with three half-scale copies at
``(0, 0)``, ``(1/2, 0)``, ``(0, 1/2)``.  ``G_n`` is built from the notched
hexagon ``H0`` with seven third-scale copies translated by ``v_0 .. v_6``.
Membership at depth n asks whether some chain of n child preimages lands in
the seed.  Any accepting branch suffices, which matters on shared
boundaries.

Points are Rationals at the interface.  Internally they are scaled to a
common integer denominator, so each preimage step is a pair of integer
multiply-subtracts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Literal, Optional

from .digitvec import DigitVec2, DigitVec3
from .errors import DomainError, ParseError, ResourceLimitError
from .exact import Rational, parse_rational
from .numeral import Expansion, dual_representations

__all__ = [
    "ApproximantSpec",
    "CELL_GUARD",
    "HexCell",
    "MembershipResult",
    "Point",
    "SIERPINSKI_TRANSLATIONS",
    "SNOWFLAKE_TRANSLATIONS",
    "Triangle",
    "approximant_cells",
    "digit_member_sierpinski",
    "digit_member_snowflake",
    "first_digit_admissible",
    "h0_member",
    "h0_polygon",
    "parse_point",
    "sierpinski_member",
    "snowflake_member",
    "t0_member",
]

CELL_GUARD = 10**7

HALF = Fraction(1, 2)
SIXTH = Fraction(1, 6)
THIRD = Fraction(1, 3)

SIERPINSKI_TRANSLATIONS = ((0, 0), (HALF, 0), (0, HALF))
SNOWFLAKE_TRANSLATIONS = (
    (0, 0),
    (THIRD, 0),
    (0, THIRD),
    (THIRD, -THIRD),
    (-THIRD, 0),
    (0, -THIRD),
    (-THIRD, THIRD),
)
# the same, as integer multiples of the child scale
_S_SHIFTS = ((0, 0), (1, 0), (0, 1))
_G_SHIFTS = ((0, 0), (1, 0), (0, 1), (1, -1), (-1, 0), (0, -1), (-1, 1))


@dataclass(frozen=True)
class Point:
    x: Rational
    y: Rational

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __str__(self) -> str:
        return f"{self.x},{self.y}"


def parse_point(text: str) -> Point:
    """``"p/q,p/q"``."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError("expected 'x,y'", text, len(parts[0]))
    return Point(parse_rational(parts[0]), parse_rational(parts[1]))


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    trace: Optional[tuple[int, ...]] = field(default=None)

    def __bool__(self) -> bool:
        return self.member


def _scaled(p: Point) -> tuple[int, int, int]:
    d = lcm(p.x.denominator, p.y.denominator)
    return p.x.numerator * (d // p.x.denominator), p.y.numerator * (d // p.y.denominator), d


def _t0(x: int, y: int, d: int) -> bool:
    return x >= 0 and y >= 0 and x + y <= d


def _square(x: int, y: int, d: int) -> bool:
    return 2 * abs(x) <= d and 2 * abs(y) <= d


def _h0(x: int, y: int, d: int) -> bool:
    if not _square(x, y, d) or 2 * abs(x + y) > d:
        return False
    # the two notches are open triangles; their edges stay in H0
    if 6 * x > d and 6 * y > d and 2 * (x + y) < d:
        return False
    if 6 * x < -d and 6 * y < -d and 2 * (x + y) > -d:
        return False
    return True


def t0_member(p: Point) -> bool:
    return _t0(*_scaled(p))


def h0_member(p: Point) -> bool:
    x, y, d = _scaled(p)
    if not _square(x, y, d):
        raise DomainError(f"({p}) outside [-1/2, 1/2]^2")
    return _h0(x, y, d)


def first_digit_admissible(p: Point) -> bool:
    """Whether some balanced-ternary first digits of x and y are compatible.

    First digit 0 is available on [-1/6, 1/6], 1 on [1/6, 1/2] and -1 on
    [-1/2, -1/6]; the pair is compatible when the product is 0 or the sum
    is 0.  Inside the hexagon this region coincides with ``h0_member``
    except on the two open notch edges on x + y = +-1/2, which H0 keeps.
    """
    x, y = p
    if not (abs(x) <= HALF and abs(y) <= HALF):
        raise DomainError(f"({p}) outside [-1/2, 1/2]^2")

    def firsts(t):
        out = set()
        if abs(t) <= SIXTH:
            out.add(0)
        if t >= SIXTH:
            out.add(1)
        if t <= -SIXTH:
            out.add(-1)
        return out

    return any(a * b == 0 or a + b == 0 for a in firsts(x) for b in firsts(y))


def _search(x, y, d, depth, scale, shifts, prune, seed, want_trace):
    """Depth-first search for a chain of child preimages ending in the seed."""
    path: list[int] = []

    def go(cx, cy, level):
        if level == 0:
            return seed(cx, cy, d)
        for idx, (sx, sy) in enumerate(shifts):
            qx = scale * cx - sx * d
            qy = scale * cy - sy * d
            if prune(qx, qy, d):
                path.append(idx)
                if go(qx, qy, level - 1):
                    return True
                path.pop()
        return False

    if not prune(x, y, d):
        return MembershipResult(False)
    found = go(x, y, depth)
    return MembershipResult(found, tuple(path) if want_trace and found else None)


def sierpinski_member(p: Point, depth: int, trace: bool = False) -> MembershipResult:
    """Membership in ``S_depth``; the trace lists the child index taken at each level."""
    if depth < 0:
        raise DomainError("depth must be >= 0")
    x, y, d = _scaled(p)
    return _search(x, y, d, depth, 2, _S_SHIFTS, _t0, _t0, trace)


def snowflake_member(p: Point, depth: int, trace: bool = False) -> MembershipResult:
    """Membership in ``G_depth``; the trace lists which v_i was taken at each level."""
    if depth < 0:
        raise DomainError("depth must be >= 0")
    x, y, d = _scaled(p)
    if not _square(x, y, d):
        raise DomainError(f"({p}) outside [-1/2, 1/2]^2")
    return _search(x, y, d, depth, 3, _G_SHIFTS, _square, _h0, trace)


# --- digit-condition membership ---------------------------------------------


def _compatible(ex: Expansion, ey: Expansion, ok) -> bool:
    n = max(len(ex.prefix), len(ey.prefix))
    if not all(ok(ex.digit(j), ey.digit(j)) for j in range(1, n + 1)):
        return False
    # beyond both prefixes only the tail digits repeat
    return ok(ex.tail, ey.tail)


def _digit_member(x, y, allow_dual, ok) -> bool:
    if not allow_dual:
        n = max(len(x), len(y))
        return all(ok(x[j], y[j]) for j in range(1, n + 1))
    return any(
        _compatible(ex, ey, ok)
        for ex in dual_representations(x)
        for ey in dual_representations(y)
    )


def _disjoint_digits(a: int, b: int) -> bool:
    return a * b == 0


def _cancel_or_disjoint(a: int, b: int) -> bool:
    return a * b == 0 or a + b == 0


def digit_member_sierpinski(x: DigitVec2, y: DigitVec2, allow_dual: bool = False) -> bool:
    """Binary digit test ``x_j * y_j == 0`` for all j, optionally over all dual expansions."""
    return _digit_member(x, y, allow_dual, _disjoint_digits)


def digit_member_snowflake(x: DigitVec3, y: DigitVec3, allow_dual: bool = False) -> bool:
    return _digit_member(x, y, allow_dual, _cancel_or_disjoint)


# --- cell enumeration --------------------------------------------------------


@dataclass(frozen=True)
class ApproximantSpec:
    fractal: Literal["sierpinski", "snowflake"]
    depth: int

    def __post_init__(self):
        if self.fractal not in ("sierpinski", "snowflake"):
            raise DomainError(f"unknown fractal {self.fractal!r}")
        if self.depth < 0:
            raise DomainError("depth must be >= 0")

    @property
    def cell_count(self) -> int:
        return (3 if self.fractal == "sierpinski" else 7) ** self.depth


@dataclass(frozen=True)
class Triangle:
    """Right triangle with legs along the axes from ``corner``."""

    corner: Point
    side: Rational

    def vertices(self) -> list[Point]:
        c, s = self.corner, self.side
        return [c, Point(c.x + s, c.y), Point(c.x, c.y + s)]


def h0_polygon() -> list[Point]:
    """Outline of H0 traced around the two notches, counter-clockwise."""
    raw = [
        (HALF, 0), (THIRD, SIXTH), (SIXTH, SIXTH), (SIXTH, THIRD), (0, HALF),
        (-HALF, HALF), (-HALF, 0), (-THIRD, -SIXTH), (-SIXTH, -SIXTH),
        (-SIXTH, -THIRD), (0, -HALF), (HALF, -HALF),
    ]
    return [Point(x, y) for x, y in raw]


@dataclass(frozen=True)
class HexCell:
    """A copy of H0 scaled by ``scale`` about the origin, then moved to ``center``."""

    center: Point
    scale: Rational

    def vertices(self) -> list[Point]:
        c, s = self.center, self.scale
        return [Point(c.x + s * v.x, c.y + s * v.y) for v in h0_polygon()]


def approximant_cells(spec: ApproximantSpec) -> list[Triangle] | list[HexCell]:
    if spec.cell_count > CELL_GUARD:
        raise ResourceLimitError(
            f"{spec.fractal} depth {spec.depth} has {spec.cell_count} cells (> {CELL_GUARD})"
        )
    if spec.fractal == "sierpinski":
        cells = [Triangle(Point(0, 0), Fraction(1))]
        for _ in range(spec.depth):
            cells = [
                Triangle(Point(tx + c.corner.x / 2, ty + c.corner.y / 2), c.side / 2)
                for tx, ty in SIERPINSKI_TRANSLATIONS
                for c in cells
            ]
        return cells
    hexes = [HexCell(Point(0, 0), Fraction(1))]
    for _ in range(spec.depth):
        hexes = [
            HexCell(Point(vx + c.center.x / 3, vy + c.center.y / 3), c.scale / 3)
            for vx, vy in SNOWFLAKE_TRANSLATIONS
            for c in hexes
        ]
    return hexes
