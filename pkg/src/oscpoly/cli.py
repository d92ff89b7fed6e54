"""Command-line interface.

Usage:
    oscpoly hermite --n 2 --format json
    oscpoly laguerre --n 1
    oscpoly transform --direction laguerre-from-even --route operator --n 1
    oscpoly verify --suite all --max-n 12
    oscpoly gram --family radial --max-n 1 --format csv
    oscpoly quad --kind laguerre --m 4 --alpha 1 --dump

Exit codes: 0 success (or all checks pass), 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from . import moments, quadrature
from .classical import PolyFamilyTag, generate
from .exact import (
    GScalar,
    MomentValue,
    XPoly,
    format_gscalar,
    moment_to_json,
    rational_to_str,
    xpoly_specialize,
    xpoly_to_json,
)
from .transforms import Direction, Route, TransformSpec, transform
from .verify import SUITES, run_suite

DEFAULT_MAX_N = 32
FORMATS = ("json", "csv", "pretty")


def default_max_n() -> int:
    raw = os.environ.get("OSCPOLY_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        value = -1
    if value < 0:
        raise SystemExit(_usage_error(f"OSCPOLY_MAX_N must be a nonnegative integer, got {raw!r}"))
    return value


def _usage_error(msg: str) -> int:
    print(f"oscpoly: error: {msg}", file=sys.stderr)
    return 2


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def _pos_int(text: str) -> int:
    value = _nonneg_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 3/2, got {text!r}") from None


# -- rendering -------------------------------------------------------------

def _specialize_moment(mv: MomentValue, gval: Fraction | None) -> MomentValue:
    if gval is None:
        return mv
    return MomentValue(*(GScalar.const(c.eval(gval)) for c in mv.components))


def render_poly(p: XPoly, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(xpoly_to_json(p)) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["x_power", "g_power", "coefficient"])
        for j, c in enumerate(p.coeffs):
            for i, r in enumerate(c.coeffs):
                if r:
                    writer.writerow([j, i, rational_to_str(r)])
    else:
        out.write(str(p) + "\n")


def render_matrix(mat: list[list[MomentValue]], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps([[moment_to_json(v) for v in row] for row in mat]) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        for row in mat:
            writer.writerow([";".join(format_gscalar(c) for c in v.components) for v in row])
    else:
        cells = [[str(v) for v in row] for row in mat]
        width = max((len(c) for row in cells for c in row), default=1)
        for row in cells:
            out.write("  ".join(c.rjust(width) for c in row) + "\n")


# -- commands --------------------------------------------------------------

def cmd_generate(args) -> int:
    family = PolyFamilyTag(args.command)
    p = generate(family, args.n)
    if args.g is not None:
        p = xpoly_specialize(p, args.g)
    render_poly(p, args.format, sys.stdout)
    return 0


def cmd_transform(args) -> int:
    spec = TransformSpec(Direction(args.direction), Route(args.route))
    p = transform(spec, args.n)
    if args.g is not None:
        p = xpoly_specialize(p, args.g)
    render_poly(p, args.format, sys.stdout)
    return 0


def cmd_gram(args) -> int:
    n = args.max_n
    builders = {
        "radial": lambda: moments.gram_radial(n),
        "F": lambda: moments.gram_F(n),
        "hermite-halfline-even": lambda: moments.gram_hermite_halfline("even", n),
        "hermite-halfline-odd": lambda: moments.gram_hermite_halfline("odd", n),
        "hermite-fullline": lambda: moments.gram_hermite_fullline(n),
    }
    mat = [[_specialize_moment(v, args.g) for v in row] for row in builders[args.family]()]
    render_matrix(mat, args.format, sys.stdout)
    return 0


def cmd_verify(args) -> int:
    out = sys.stdout
    writer = csv.writer(out, lineterminator="\n") if args.report_format == "csv" else None
    if writer:
        writer.writerow(["identity", "indices", "pass"])
    total = passed = 0
    for report in run_suite(args.suite, args.max_n, args.jobs):
        total += 1
        passed += report.passed
        if args.report_format == "json":
            out.write(json.dumps(report.to_json()) + "\n")
        elif writer:
            writer.writerow([report.identity, " ".join(map(str, report.indices)), str(report.passed).lower()])
        else:
            out.write(report.line() + "\n")
            if not report.passed:
                out.write(f"    expected: {report.expected}\n    got:      {report.got}\n")
        out.flush()
    failed = total - passed
    if args.report_format == "json":
        out.write(json.dumps({"total": total, "passed": passed, "failed": failed}) + "\n")
    elif writer:
        writer.writerow(["TOTAL", f"{passed}/{total}", str(failed == 0).lower()])
    else:
        out.write(f"TOTAL {total} checks: {passed} passed, {failed} failed\n")
    return 0 if failed == 0 else 1


def cmd_quad(args) -> int:
    kind = quadrature.QuadKind(args.kind)
    rule = quadrature.build_rule(kind, args.m, None if args.alpha is None else float(args.alpha))
    if args.dump:
        sys.stdout.write(json.dumps(rule.to_json()) + "\n")
    else:
        for x, w in zip(rule.nodes, rule.weights):
            sys.stdout.write(f"{x: .17e}  {w:.17e}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oscpoly",
        description="Exact Hermite/Laguerre transforms via oscillator operators, with verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="json")

    def add_g(p):
        p.add_argument("--g", type=_rational, default=None, metavar="P/Q",
                       help="specialize the coupling g in the output (default: symbolic)")

    for fam in PolyFamilyTag:
        p = sub.add_parser(fam.value, help=f"print the {fam.value} polynomial of degree index n")
        p.add_argument("--n", type=_nonneg_int, required=True)
        add_format(p)
        add_g(p)
        p.set_defaults(func=cmd_generate)

    p = sub.add_parser("transform", help="Hermite <-> Laguerre transforms")
    p.add_argument("--direction", choices=[d.value for d in Direction], required=True)
    p.add_argument("--route", choices=[r.value for r in Route], default=Route.DIRECT_SUM.value)
    p.add_argument("--n", type=_nonneg_int, required=True)
    add_format(p)
    add_g(p)
    p.set_defaults(func=cmd_transform)

    max_n = default_max_n()

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-n", type=_nonneg_int, default=max_n)
    p.add_argument("--report-format", choices=FORMATS, default="pretty")
    p.add_argument("--jobs", type=_pos_int, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gram", help="print an exact Gram matrix")
    p.add_argument("--family", required=True,
                   choices=["radial", "F", "hermite-halfline-even", "hermite-halfline-odd", "hermite-fullline"])
    p.add_argument("--max-n", type=_nonneg_int, default=max_n)
    add_format(p)
    add_g(p)
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("quad", help="build a Gauss quadrature rule")
    p.add_argument("--kind", choices=[k.value for k in quadrature.QuadKind], required=True)
    p.add_argument("--m", type=_pos_int, required=True)
    p.add_argument("--alpha", type=_rational, default=None)
    p.add_argument("--dump", action="store_true", help="print the rule as JSON")
    p.set_defaults(func=cmd_quad)
    return parser


OPERATOR_DIRECTIONS = (Direction.LAGUERRE_FROM_EVEN.value, Direction.LAGUERRE_FROM_ODD.value)


def _validate(parser: argparse.ArgumentParser, args) -> None:
    # parser.error prints usage to stderr and exits with status 2
    if args.command == "transform" and args.route == Route.OPERATOR_SERIES.value \
            and args.direction not in OPERATOR_DIRECTIONS:
        parser.error(f"--route operator is not available for {args.direction}")
    if args.command == "quad":
        if args.kind == quadrature.QuadKind.GAUSS_LAGUERRE.value:
            if args.alpha is None:
                parser.error("--alpha is required for a Laguerre rule")
            if not args.alpha > -1:
                parser.error(f"--alpha must exceed -1, got {args.alpha}")
        elif args.alpha is not None:
            parser.error("--alpha only applies to Laguerre rules")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
