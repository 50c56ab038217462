"""Deterministic SVG and PGM output for approximants and linearity clouds.

Nothing here feeds back into the exact logic.  SVG coordinates are decimal
text: exact when the value is a terminating decimal, else 12 significant
digits.  The y axis is flipped on output so that y grows upwards as in the
usual figure orientation.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Context, Decimal
from fractions import Fraction
from math import lcm
from typing import Literal, Optional, Union

import numpy as np

from . import _kernels as K
from . import tables
from .errors import DomainError, ResourceLimitError
from .fractal import CELL_GUARD, ApproximantSpec, Point, approximant_cells
from .exact import Rational

__all__ = [
    "CLOUD_GUARD",
    "PIXEL_GUARD",
    "RenderJob",
    "cloud_points",
    "emit_svg",
    "natural_viewport",
    "pixel_centers",
    "plot_linearity_cloud",
    "rasterize_pgm",
    "render",
]

CLOUD_GUARD = {2: 12, 3: 8}
PIXEL_GUARD = 10**8

_FRACTAL_OF_BASE = {2: "sierpinski", 3: "snowflake"}
_BASE_OF_FRACTAL = {v: k for k, v in _FRACTAL_OF_BASE.items()}


def natural_viewport(fractal: str) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    if fractal == "sierpinski":
        return (Fraction(0), Fraction(0), Fraction(1), Fraction(1))
    h = Fraction(1, 2)
    return (-h, -h, h, h)


@dataclass(frozen=True)
class RenderJob:
    """What to draw.

    With ``cloud`` set, ``depth`` is the digit length N and the image shows
    the points of every admissible digit pair of that length.  Otherwise it
    shows the approximant at ``depth``.  ``viewport`` is ``(x0, y0, x1, y1)``
    and must be square.
    """

    fractal: Literal["sierpinski", "snowflake"]
    depth: int
    fmt: Literal["svg", "pgm"] = "svg"
    width: int = 512
    viewport: Optional[tuple[Rational, Rational, Rational, Rational]] = None
    cloud: bool = False

    def __post_init__(self):
        ApproximantSpec(self.fractal, self.depth)  # validates both fields
        if self.fmt not in ("svg", "pgm"):
            raise DomainError(f"unknown format {self.fmt!r}")
        if self.width < 1:
            raise DomainError("width must be >= 1")
        vp = self.viewport or natural_viewport(self.fractal)
        vp = tuple(Fraction(v) for v in vp)
        x0, y0, x1, y1 = vp
        if x1 <= x0 or y1 <= y0 or x1 - x0 != y1 - y0:
            raise DomainError("viewport must be a non-empty square")
        object.__setattr__(self, "viewport", vp)

    @property
    def base(self) -> int:
        return _BASE_OF_FRACTAL[self.fractal]

    def guard(self) -> None:
        if self.cloud:
            if self.depth > CLOUD_GUARD[self.base]:
                raise ResourceLimitError(
                    f"cloud digit length {self.depth} > {CLOUD_GUARD[self.base]} for base {self.base}"
                )
        elif ApproximantSpec(self.fractal, self.depth).cell_count > CELL_GUARD:
            raise ResourceLimitError(f"more than {CELL_GUARD} cells")
        if self.width * self.width > PIXEL_GUARD:
            raise ResourceLimitError(f"more than {PIXEL_GUARD} pixels")


def _decimal(q: Fraction) -> str:
    n, d = q.numerator, q.denominator
    twos = fives = 0
    r = d
    while r % 2 == 0:
        r //= 2
        twos += 1
    while r % 5 == 0:
        r //= 5
        fives += 1
    if r == 1:
        places = max(twos, fives)
        scaled = n * 10**places // d
        sign = "-" if scaled < 0 else ""
        digits = str(abs(scaled)).rjust(places + 1, "0")
        text = digits[: len(digits) - places] + ("." + digits[-places:] if places else "")
        if "." in text:
            text = text.rstrip("0").rstrip(".")
        return sign + text
    text = format(Context(prec=12).divide(Decimal(n), Decimal(d)), "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def _to_px(job: RenderJob, p: Point) -> tuple[Fraction, Fraction]:
    x0, y0, x1, y1 = job.viewport
    s = Fraction(job.width) / (x1 - x0)
    return (p.x - x0) * s, (y1 - p.y) * s


def _svg_document(job: RenderJob, body: list[str]) -> str:
    w = job.width
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{w}" '
        f'viewBox="0 0 {w} {w}">\n'
        f'<rect x="0" y="0" width="{w}" height="{w}" fill="white"/>\n'
    )
    return head + "".join(body) + "</svg>\n"


def emit_svg(job: RenderJob) -> str:
    """One ``polygon`` per approximant cell (or one ``rect`` per cloud point)."""
    job.guard()
    body = []
    if job.cloud:
        res = job.base**job.depth
        side = Fraction(job.width, res)
        for col, row in _cloud_pixels(job, res):
            body.append(
                f'<rect x="{_decimal(col * side)}" y="{_decimal(row * side)}" '
                f'width="{_decimal(side)}" height="{_decimal(side)}" fill="gray"/>\n'
            )
        return _svg_document(job, body)
    for cell in approximant_cells(ApproximantSpec(job.fractal, job.depth)):
        pts = " ".join(
            f"{_decimal(px)},{_decimal(py)}" for px, py in (_to_px(job, v) for v in cell.vertices())
        )
        body.append(f'<polygon points="{pts}" fill="gray"/>\n')
    return _svg_document(job, body)


def pixel_centers(job: RenderJob) -> tuple[np.ndarray, np.ndarray, int]:
    """Integer-scaled pixel centres ``(X, Y, D)``, row-major from the top row.

    Pixel ``(row, col)`` has centre ``(X / D, Y / D)`` with
    ``x = x0 + (col + 1/2) * (x1 - x0) / W`` and
    ``y = y1 - (row + 1/2) * (y1 - y0) / W``.
    """
    x0, y0, x1, y1 = job.viewport
    w = job.width
    den = lcm(*(v.denominator for v in job.viewport))
    d = 2 * w * den
    step = int((x1 - x0) * d / (2 * w))  # exact: (x1 - x0) * den is an integer
    odd = 2 * np.arange(w, dtype=np.int64) + 1
    xs = int(x0 * d) + odd * step
    ys = int(y1 * d) - odd * step
    X = np.tile(xs, w)
    Y = np.repeat(ys, w)
    return X, Y, d


def _pgm(width: int, dark: np.ndarray) -> bytes:
    pixels = np.where(dark, 0, 255).astype(np.uint8)
    return f"P5\n{width} {width}\n255\n".encode("ascii") + pixels.tobytes()


def rasterize_pgm(job: RenderJob) -> bytes:
    """Binary PGM; a pixel is dark (0) iff its centre is a member at ``job.depth``."""
    job.guard()
    w = job.width
    if job.cloud:
        dark = np.zeros(w * w, dtype=bool)
        for col, row in _cloud_pixels(job, w):
            dark[row * w + col] = True
        return _pgm(w, dark)
    X, Y, d = pixel_centers(job)
    kind = K.SIERPINSKI if job.fractal == "sierpinski" else K.SNOWFLAKE
    return _pgm(w, K.member_grid(X, Y, d, job.depth, kind))


def cloud_points(base: int, digit_len: int) -> list[Point]:
    """Points ``([0.x]_b, [0.y]_b)`` of every admissible digit pair, lexicographic.

    Base 2 keeps pairs passing the Z2 linearity check; base 3 keeps pairs
    whose agreement vector is empty (and which are therefore linear).
    """
    pairs, vals, den = _cloud_pairs(base, digit_len)
    return [Point(Fraction(int(vals[i]), den), Fraction(int(vals[k]), den)) for i, k in pairs]


def _cloud_pairs(base: int, n: int):
    if base not in CLOUD_GUARD:
        raise DomainError(f"base must be 2 or 3, got {base}")
    if n < 0:
        raise DomainError("digit length must be >= 0")
    if n > CLOUD_GUARD[base]:
        raise ResourceLimitError(f"digit length {n} > {CLOUD_GUARD[base]} for base {base}")
    S = tables.scaled_sigmas(base, n)
    if base == 2:
        pairs = K.linear_pairs2(S)
    else:
        _, W = tables.sigma_weights(n)
        pairs = K.zempty_pairs3(tables.digit_table(3, n), S, W)
    return pairs, tables.scaled_values(base, n), base**n


def _cloud_pixels(job: RenderJob, width: int):
    """(col, row) of the pixel holding each cloud point, at ``width`` pixels across."""
    pairs, vals, den = _cloud_pairs(job.base, job.depth)
    x0, y0, x1, y1 = job.viewport
    span = x1 - x0
    out = []
    for i, k in pairs:
        x = Fraction(int(vals[i]), den)
        y = Fraction(int(vals[k]), den)
        fx = (x - x0) * width / span
        fy = (y - y0) * width / span
        col = fx.numerator // fx.denominator
        row = width - 1 - fy.numerator // fy.denominator
        if 0 <= col < width and 0 <= row < width:
            out.append((col, row))
    return out


def plot_linearity_cloud(
    base: int, digit_len: int, fmt: str = "pgm", width: Optional[int] = None
) -> Union[str, bytes]:
    if base not in _FRACTAL_OF_BASE:
        raise DomainError(f"base must be 2 or 3, got {base}")
    job = RenderJob(
        _FRACTAL_OF_BASE[base],
        digit_len,
        fmt,
        width if width is not None else base**digit_len,
        cloud=True,
    )
    return render(job)


def render(job: RenderJob) -> Union[str, bytes]:
    return emit_svg(job) if job.fmt == "svg" else rasterize_pgm(job)
