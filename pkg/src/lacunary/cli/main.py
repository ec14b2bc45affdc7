"""
The `lacunary` command.

Every verb validates its parameters, runs one engine call and prints a Report
on stdout, as JSON (full precision) or as an aligned table. Diagnostics and
logging go to stderr.

Exit status:
    0  success
    1  computational failure (a LacunaryError)
    2  usage error or invalid parameters

Environment:
    LACUNARY_OUTPUT_DIR  default directory for figure files (./figures)
    LACUNARY_LOG_LEVEL   base log level (WARNING); -v and -vv raise it
"""

import argparse
import logging
import math
import os
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from lacunary import __version__
from lacunary.cli import validators
from lacunary.cli.output import Report, render
from lacunary.cli.reproduce import TABLES, reproduce_figure, reproduce_table
from lacunary.core.context import ProblemContext
from lacunary.core.engine import LacunaryEngine
from lacunary.core.errors import LacunaryError
from lacunary.core.saddles import saddle_guess

logger = logging.getLogger("lacunary")

# ============================================================================
# CONFIGURATION
# ============================================================================

DEFAULT_OUTPUT_DIR = "figures"
DEFAULT_LOG_LEVEL = "WARNING"


class UsageError(Exception):
    """Parameters that parse but fail validation."""


def _configure_logging(verbosity: int) -> None:
    level = logging.getLevelName(os.getenv("LACUNARY_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper())
    if not isinstance(level, int):
        level = logging.WARNING
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = min(level, logging.INFO)
    logging.basicConfig(level=level, format="%(levelname)s: %(message)s", stream=sys.stderr)


def _output_dir(args: argparse.Namespace) -> Path:
    if args.out is not None:
        return Path(args.out)
    return Path(os.getenv("LACUNARY_OUTPUT_DIR", DEFAULT_OUTPUT_DIR))


def _check(result: tuple[bool, str]) -> None:
    ok, message = result
    if not ok:
        raise UsageError(message)


def _context(args: argparse.Namespace) -> ProblemContext:
    _check(validators.validate_degree(args.n))
    _check(validators.validate_parameterization(args.x, args.z, args.abs_x, args.theta_pi))
    return LacunaryEngine.context(args.n, x=args.x, z=args.z, abs_x=args.abs_x, theta_pi=args.theta_pi)


def _y(args: argparse.Namespace) -> float:
    """y = |x|^2 from --y, or from a real parameterization."""
    if args.y is not None:
        _check(validators.validate_y(args.y))
        return args.y
    ctx = _context(args)
    if not ctx.is_real:
        raise UsageError("gn and conjecture need real x; give --y or a real --x/--abs-x.")
    return ctx.abs_x**2


# ============================================================================
# VERBS
# ============================================================================


def cmd_eval(engine: LacunaryEngine, args: argparse.Namespace) -> Report:
    _check(validators.validate_degree(args.n))
    if args.method == "direct" and args.z is not None:
        # direct summation accepts any z
        _check(
            validators.validate_parameterization(
                args.x, args.z, args.abs_x, args.theta_pi, any_z=True
            )
        )
        z = args.z
        label = f"n={args.n} z={z}"
    else:
        ctx = _context(args)
        z = ctx.z
        label = f"n={args.n} x={ctx.x}"

    report = Report(title=f"wp_n(z) by {args.method}")
    if args.method == "quadrature":
        value = engine.evaluate_quadrature(ctx)
        report.add(label, {"re": value.real, "im": value.imag})
    else:
        result = engine.evaluate(args.n, z, args.accumulator)
        report.add(
            label,
            {
                "re": result.value.real,
                "im": result.value.imag,
                "terms": float(result.term_count),
                "condition": result.condition,
            },
        )
    return report


def cmd_saddles(engine: LacunaryEngine, args: argparse.Namespace) -> Report:
    ctx = _context(args)
    k_min = 0 if args.kmin is None else args.kmin
    k_max = 5 if args.kmax is None else args.kmax
    _check(validators.validate_k_range(k_min, k_max))
    report = Report(title=f"Saddles s_k, n={ctx.n}, x={ctx.x}")
    for saddle in engine.saddles(ctx, k_min, k_max):
        guess = saddle_guess(saddle.k, ctx)
        report.add(
            f"k={saddle.k}",
            {
                "re": saddle.s.real,
                "im": saddle.s.imag,
                "guess_re": guess.real,
                "guess_im": guess.imag,
                "residual": saddle.residual,
                "iterations": float(saddle.iterations),
            },
        )
    return report


def cmd_expand(engine: LacunaryEngine, args: argparse.Namespace) -> Report:
    ctx = _context(args)
    _check(validators.validate_jmax(args.jmax))
    result = engine.expand(ctx, j_max=args.jmax, k_max=args.kmax)
    report = Report(title=f"Saddle-point expansion, n={ctx.n}, x={ctx.x}, jmax={args.jmax}")
    report.add("total", {"re": result.total.real, "im": result.total.imag})
    for jk in result.contributions:
        report.add(
            f"J_{jk.k}",
            {"re": jk.value.real, "im": jk.value.imag, "log10_abs": jk.log10_magnitude},
        )
    if result.truncation_note:
        report.notes.append(result.truncation_note)
    report.notes.extend(result.warnings)
    return report


def cmd_gn(engine: LacunaryEngine, args: argparse.Namespace) -> Report:
    _check(validators.validate_degree(args.n))
    y = _y(args)
    report = Report(title="r(n) approximation")
    report.add(f"n={args.n} y={y:g}", {"value": engine.gn(args.n, y)})
    return report


def cmd_conjecture(engine: LacunaryEngine, args: argparse.Namespace) -> Report:
    _check(validators.validate_degree(args.n))
    y = _y(args)
    report = Report(title="Lambert-W conjecture")
    report.add(f"n={args.n} y={y:g}", {"value": engine.conjecture(args.n, y)})
    return report


def cmd_stokes(engine: LacunaryEngine, args: argparse.Namespace) -> Report:
    _check(validators.validate_degree(args.n))
    _check(validators.validate_pairs(args.pairs))
    if args.abs_x is None or not args.abs_x > 1.0:
        raise UsageError("stokes needs --abs-x greater than 1.")
    chart = engine.stokes_chart(args.n, args.abs_x, args.pairs)
    report = Report(title=f"Stokes angles, n={args.n}, |x|={args.abs_x:g}")
    for event in chart.events:
        a, b = event.pair
        report.add(f"s{a},s{b}", {"theta_pi": event.theta_pi, "residual": event.residual})
    report.notes.extend(f"no connection for s{a},s{b} above the theta floor" for a, b in chart.missing)
    return report


def cmd_paths(engine: LacunaryEngine, args: argparse.Namespace) -> Report:
    ctx = _context(args)
    k_min = -2 if args.kmin is None else args.kmin
    k_max = 2 if args.kmax is None else args.kmax
    _check(validators.validate_k_range(k_min, k_max))
    out_dir = _output_dir(args)
    out_dir.mkdir(parents=True, exist_ok=True)
    theta_pi = ctx.theta / math.pi
    target = out_dir / f"paths_n{ctx.n}_x{ctx.abs_x:g}_t{theta_pi:.5g}.{args.figure_format}"

    traced = engine.paths(ctx, k_min, k_max, ascent=args.ascent)
    engine.figure(ctx, k_min, k_max, fmt=args.figure_format, target=target, traced=traced)
    polylines = traced[1]

    report = Report(title=f"Steepest paths, n={ctx.n}, x={ctx.x}")
    for line in polylines:
        end = line.points[-1]
        values = {"points": float(len(line.points)), "end_re": end.real, "end_im": end.imag}
        if line.terminus_index is not None:
            values["T"] = float(line.terminus_index)
        report.add(f"k={line.k} {line.kind} -> {line.terminus}", values)
    if args.integrate:
        value = engine.contour_value(ctx, k_min, k_max)
        report.add("contour sum", {"re": value.real, "im": value.imag})
    report.notes.append(f"wrote {target}")
    return report


def cmd_profile(engine: LacunaryEngine, args: argparse.Namespace) -> Report:
    ctx = _context(args)
    k_min = -20 if args.kmin is None else args.kmin
    k_max = 1 if args.kmax is None else args.kmax
    _check(validators.validate_k_range(k_min, k_max))
    _check(validators.validate_jmax(args.jmax))
    report = Report(title=f"log10 |J_k|, n={ctx.n}, x={ctx.x}")
    for k, value in engine.profile(ctx, k_min, k_max, j_max=args.jmax):
        report.add(f"k={k}", {"log10_abs": value})
    return report


def cmd_reproduce(engine: LacunaryEngine, args: argparse.Namespace) -> Report:
    if (args.table is None) == (args.fig is None):
        raise UsageError("Give exactly one of --table, --fig.")
    if args.table is not None:
        return reproduce_table(engine, args.table)
    return reproduce_figure(engine, args.fig, _output_dir(args), args.figure_format)


COMMANDS: dict[str, Callable[[LacunaryEngine, argparse.Namespace], Report]] = {
    "eval": cmd_eval,
    "saddles": cmd_saddles,
    "expand": cmd_expand,
    "gn": cmd_gn,
    "conjecture": cmd_conjecture,
    "stokes": cmd_stokes,
    "paths": cmd_paths,
    "profile": cmd_profile,
    "reproduce": cmd_reproduce,
}


# ============================================================================
# PARSER
# ============================================================================


def _add_problem_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, help="Degree n.")
    group = parser.add_argument_group("argument (give one of --x, --z, --abs-x)")
    group.add_argument("--x", type=validators.parse_complex, help="x, e.g. 2 or 1.5,0.3")
    group.add_argument("--z", type=validators.parse_complex, help="z = x^-2")
    group.add_argument("--abs-x", type=float, help="|x|, with optional --theta-pi")
    group.add_argument("--theta-pi", type=float, help="arg(x)/pi in [-0.5, 0.5]")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "table"), default="table")
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Increase logging verbosity (use -vv for debug output).",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lacunary",
        description="Exact values and saddle-point asymptotics of lacunary binomial-type polynomials.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("eval", help="wp_n(z) by direct summation or quadrature")
    _add_problem_args(p)
    p.add_argument("--method", choices=("direct", "quadrature"), default="direct")
    p.add_argument("--accumulator", choices=("neumaier", "double-double"), default="neumaier")

    p = sub.add_parser("saddles", help="refined saddles s_k with their large-n guesses")
    _add_problem_args(p)
    p.add_argument("--kmin", type=int)
    p.add_argument("--kmax", type=int)

    p = sub.add_parser("expand", help="saddle-point expansion")
    _add_problem_args(p)
    p.add_argument("--jmax", type=int, default=3)
    p.add_argument("--kmax", type=int, help="real x only; default chosen automatically")

    for verb, text in (("gn", "r(n) approximation"), ("conjecture", "Lambert-W conjecture form")):
        p = sub.add_parser(verb, help=text)
        _add_problem_args(p)
        p.add_argument("--y", type=float, help="y = x^2 > 1")

    p = sub.add_parser("stokes", help="Stokes angles for adjacent saddle pairs")
    p.add_argument("--n", type=int)
    p.add_argument("--abs-x", type=float)
    p.add_argument("--pairs", type=int, default=5)

    p = sub.add_parser("paths", help="steepest paths, written as SVG or CSV")
    _add_problem_args(p)
    p.add_argument("--kmin", type=int)
    p.add_argument("--kmax", type=int)
    p.add_argument("--ascent", action="store_true", help="also trace ascent paths")
    p.add_argument("--integrate", action="store_true", help="sum J_k along the paths")
    p.add_argument("--figure-format", choices=("svg", "csv"), default="svg")
    p.add_argument("--out", help="output directory (default $LACUNARY_OUTPUT_DIR or ./figures)")

    p = sub.add_parser("profile", help="log10 |J_k| over a range of k")
    _add_problem_args(p)
    p.add_argument("--kmin", type=int)
    p.add_argument("--kmax", type=int)
    p.add_argument("--jmax", type=int, default=3)

    p = sub.add_parser("reproduce", help="recompute a published table or figure")
    p.add_argument("--table", type=int, choices=sorted(TABLES))
    p.add_argument("--fig", type=int, choices=(1, 2, 3))
    p.add_argument("--figure-format", choices=("svg", "csv"), default="svg")
    p.add_argument("--out", help="output directory (default $LACUNARY_OUTPUT_DIR or ./figures)")

    for subparser in sub.choices.values():
        _add_common(subparser)
    return parser


# ============================================================================
# ENTRY POINT
# ============================================================================


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    _configure_logging(args.verbose)
    engine = LacunaryEngine()
    try:
        report = COMMANDS[args.verb](engine, args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LacunaryError as exc:
        logger.debug("computation failed", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return 1

    sys.stdout.write(render(report, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
