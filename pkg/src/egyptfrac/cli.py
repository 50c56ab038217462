"""Command line interface.

Exit codes: 0 success (or property holds / point is a member), 1 violation
or non-membership, 2 usage or parse error, 3 resource guard exceeded.
Results go to stdout one ``key=value`` (or bare) line at a time; diagnostics
go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import egyptian as eg
from .digitvec import DigitVec2, DigitVec3
from .errors import EgyptFracError, ResourceLimitError
from .exact import format_rational, parse_rational
from .fractal import parse_point, sierpinski_member, snowflake_member
from .numeral import NumeralString, format_numeral, frac_value, parse_numeral
from .render import RenderJob, plot_linearity_cloud, render
from .verify import PROPERTIES

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

DEFAULT_DEPTH = {"sum2": 10, "sum3": 6, "thm1": 8, "thm2": 5, "lemmas": 8}


def _vec(base: int, text: str):
    return (DigitVec2 if base == 2 else DigitVec3).parse(text)


def _emit(out: Optional[str], payload) -> None:
    if out:
        mode = "wb" if isinstance(payload, bytes) else "w"
        with open(out, mode) as fh:
            fh.write(payload)
    elif isinstance(payload, bytes):
        sys.stdout.flush()
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
    else:
        sys.stdout.write(payload)


# --- efrac ------------------------------------------------------------------


def _cmd_expand(args) -> int:
    print(eg.greedy_expand(parse_rational(args.fraction)))
    return EXIT_OK


def _cmd_sum(args) -> int:
    x, y = eg.EgyptianFraction.parse(args.x), eg.EgyptianFraction.parse(args.y)
    print(eg.add_disjoint(x, y) if args.disjoint else eg.add_general(x, y))
    return EXIT_OK


def _cmd_sub(args) -> int:
    x, y = eg.EgyptianFraction.parse(args.x), eg.EgyptianFraction.parse(args.y)
    print(eg.sub_disjoint(x, y) if args.disjoint else eg.sub_general(x, y))
    return EXIT_OK


def _cmd_check(args) -> int:
    x, y = _vec(args.base, args.x), _vec(args.base, args.y)
    report = eg.check_linear_z2(x, y) if args.base == 2 else eg.check_linear_z3(x, y)
    print("\n".join(report.lines()))
    return EXIT_OK if report.linear else EXIT_FALSE


def _cmd_encode(args) -> int:
    if args.digits is not None:
        v = _vec(args.base, args.digits)
        e = eg.from_digits(v)
        numeral = NumeralString(args.base, (), v.digits)
        print(f"egyptian={e}")
        print(f"sigma={format_rational(eg.sigma(e))}")
        print(f"numeral={format_numeral(numeral)}")
        print(f"value={format_rational(frac_value(v))}")
    elif args.numeral is not None:
        n = parse_numeral(args.numeral)
        print(f"numeral={format_numeral(n)}")
        print(f"value={format_rational(n.value())}")
    else:
        x = parse_rational(args.value)
        print(f"numeral={format_numeral(NumeralString.from_value(x, args.base))}")
        print(f"value={format_rational(x)}")
    return EXIT_OK


# --- fractal ----------------------------------------------------------------


def _cmd_member(args) -> int:
    p = parse_point(args.point)
    oracle = sierpinski_member if args.set == "sierpinski" else snowflake_member
    result = oracle(p, args.depth, trace=args.trace)
    print("member" if result.member else "not member")
    if args.trace and result.member:
        print("trace=" + ",".join(map(str, result.trace)))
    return EXIT_OK if result.member else EXIT_FALSE


def _cmd_render(args) -> int:
    job = RenderJob(args.set, args.depth, args.format, args.width)
    _emit(args.out, render(job))
    return EXIT_OK


def _cmd_cloud(args) -> int:
    _emit(args.out, plot_linearity_cloud(args.base, args.depth, args.format, args.width))
    return EXIT_OK


# --- verify -----------------------------------------------------------------


def _cmd_verify(args) -> int:
    fn = PROPERTIES[args.prop]
    depth = args.depth if args.depth is not None else DEFAULT_DEPTH[args.prop]
    if args.prop in ("thm1", "thm2"):
        report = fn(depth, args.extra_depth, jobs=args.jobs)
    elif args.prop == "lemmas":
        report = fn(depth, args.depth3, jobs=args.jobs)
    else:
        report = fn(depth, jobs=args.jobs)
    print(report.to_json() if args.json else "\n".join(report.lines()))
    if args.out:
        Path(args.out).write_text(report.to_json() + "\n")
    return EXIT_OK if report.passed else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="egyptfrac",
        description="Egyptian-fraction algebra, digit-vector linearity and fractal membership.",
    )
    groups = parser.add_subparsers(dest="group", required=True, metavar="{efrac,fractal,verify}")

    efrac = groups.add_parser("efrac", help="Egyptian fraction operations")
    ecmds = efrac.add_subparsers(dest="command", required=True)

    p = ecmds.add_parser("expand", help="greedy expansion of p/q in (0, 1)")
    p.add_argument("fraction", help="rational p/q")
    p.set_defaults(func=_cmd_expand)

    for name, func, what in (("sum", _cmd_sum, "sum"), ("sub", _cmd_sub, "difference")):
        p = ecmds.add_parser(name, help=f"{what} of two Egyptian fractions")
        p.add_argument("x", help="e.g. 1/5+1/10+1/20")
        p.add_argument("y")
        p.add_argument("--disjoint", action="store_true",
                       help="require disjoint supports and take the plain union")
        p.set_defaults(func=func)

    p = ecmds.add_parser("check", help="linearity report for two digit vectors")
    p.add_argument("--base", type=int, choices=(2, 3), required=True)
    p.add_argument("x", help="digit string, e.g. 101 or 10T")
    p.add_argument("y")
    p.set_defaults(func=_cmd_check)

    p = ecmds.add_parser("encode", help="convert between digit vectors, numerals and values")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--digits", help="fractional digit string (needs --base)")
    src.add_argument("--numeral", help="bracket numeral, e.g. '[10T]_3'")
    src.add_argument("--value", help="rational to write as a numeral (needs --base)")
    p.add_argument("--base", type=int, choices=(2, 3), default=2)
    p.set_defaults(func=_cmd_encode)

    fractal = groups.add_parser("fractal", help="fractal membership and rendering")
    fcmds = fractal.add_subparsers(dest="command", required=True)

    p = fcmds.add_parser("member", help="exact approximant membership of a point")
    p.add_argument("--set", choices=("sierpinski", "snowflake"), required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--trace", action="store_true", help="print the child index chain")
    p.add_argument("point", help="x,y as p/q,p/q")
    p.set_defaults(func=_cmd_member)

    p = fcmds.add_parser("render", help="draw an approximant")
    p.add_argument("--set", choices=("sierpinski", "snowflake"), required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--format", choices=("svg", "pgm"), default="svg")
    p.add_argument("--width", type=int, default=512)
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=_cmd_render)

    p = fcmds.add_parser("cloud", help="draw the points of all admissible digit pairs")
    p.add_argument("--base", type=int, choices=(2, 3), required=True)
    p.add_argument("--depth", type=int, required=True, help="digit length N")
    p.add_argument("--format", choices=("svg", "pgm"), default="pgm")
    p.add_argument("--width", type=int, help="pixels across (default base**N)")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=_cmd_cloud)

    p = groups.add_parser("verify", help="exhaustive property checks")
    p.add_argument("--prop", choices=sorted(PROPERTIES), required=True)
    p.add_argument("--depth", type=int, help="digit length N (base 2 length for lemmas)")
    p.add_argument("--depth3", type=int, default=5, help="base 3 length for lemmas")
    p.add_argument("--extra-depth", type=int, default=2,
                   help="extra approximant depth for thm1/thm2")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true", help="print the JSON summary instead")
    p.add_argument("--out", help="also write the JSON summary here")
    p.set_defaults(func=_cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (EgyptFracError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
