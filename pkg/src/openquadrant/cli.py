"""Command-line front end.

Subcommands: metrics, expand, verify, preimage, sample, slp, plot.
Reports go to stdout as JSON; SVG figures and expansions can be written to
files.  Every subcommand is deterministic given its flags (seeds included).

Exit codes: 0 success, 1 internal error, 2 invalid input or violated
precondition, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import catalog, slp, svgfig, verify
from .polynomials import map_metrics
from .preimage import PreconditionError, SolveError, preimage, sample_forward
from .rootfind import RootFindError
from .textform import map_to_jsonable, render_table_style, serialize

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INVALID = 2
EXIT_VERIFY_FAILED = 3

EXPAND_FORMATS = ("canonical", "table-style", "json")


def _rational(text: str) -> Fraction:
    """Accept p/q, decimals, and scientific notation, all converted exactly."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _print_json(payload: dict):
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _write_text(path: str, text: str):
    target = Path(path)
    if target.parent != Path(""):
        target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")


def cmd_metrics(args) -> int:
    named = catalog.get_map(args.map)
    payload = {"map": named.name, **map_metrics(named.map).as_jsonable()}
    _print_json(payload)
    return EXIT_OK


def cmd_expand(args) -> int:
    named = catalog.get_map(args.map)
    fmt = args.format_positional or args.format
    if fmt == "canonical":
        text = serialize(named.map)
    elif fmt == "table-style":
        text = render_table_style(named.map, named.name)
    else:
        text = json.dumps({"map": named.name, **map_to_jsonable(named.map)}, indent=2) + "\n"
    if args.out:
        _write_text(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = verify.run_suites(args.suite, seed=args.seed, trials=args.n)
    ok = all(r.ok for r in reports)
    payload = {
        "suites": [r.to_jsonable() for r in reports],
        "passed": sum(r.passed_count for r in reports),
        "failed": sum(r.failed_count for r in reports),
        "ok": ok,
    }
    _print_json(payload)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_preimage(args) -> int:
    u, v = args.u, args.v
    if not (u > 0 and v > 0):
        raise PreconditionError("target not in open quadrant")
    witness = preimage((float(u), float(v)), max_residual=args.tol)
    _print_json(witness.to_jsonable())
    return EXIT_OK


def cmd_sample(args) -> int:
    report = sample_forward(args.map, args.region, args.n, args.seed)
    _print_json(report.to_jsonable())
    return EXIT_OK


def cmd_slp(args) -> int:
    programs = slp.factored_programs()
    chained = programs["f"]
    matches = serialize(slp.slp_expand(chained)) == serialize(catalog.build_f())
    payload = {
        "stages": {
            name: {"nonscalar": slp.nonscalar_count(programs[name])}
            for name in ("F", "G", "H")
        },
        "chained": {
            "nonscalar": slp.nonscalar_count(chained),
            "matches_expanded_map": matches,
        },
        "programs": {name: slp.serialize_slp(programs[name]) for name in ("F", "G", "H", "f")},
        "remark": verify.COMPLEX_COEFF_REMARK,
    }
    _print_json(payload)
    return EXIT_OK


def cmd_plot(args) -> int:
    sets = [s.strip() for s in args.sets.split(",") if s.strip()]
    if not sets:
        raise PreconditionError("no sets requested; choose from A, B, Q")
    text = svgfig.region_figure(sets)
    _write_text(args.out, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="openquadrant",
        description=(
            "Exact-arithmetic toolkit around a three-stage polynomial map of "
            "the plane whose image is the open quadrant {x>0, y>0}."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("metrics", help="degree and monomial counts of a catalog map")
    p.add_argument("map", choices=catalog.MAP_NAMES)
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("expand", help="expanded form of a catalog map")
    p.add_argument("map", choices=catalog.MAP_NAMES)
    p.add_argument("format_positional", metavar="format", nargs="?",
                   choices=EXPAND_FORMATS, help="canonical, table-style, or json")
    p.add_argument("--format", choices=EXPAND_FORMATS, default="canonical")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=verify.SUITE_NAMES + ("all",))
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--n", type=int, default=verify.DEFAULT_TRIALS,
                   help="trials per randomized identity")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("preimage", help="construct a source point for a target in Q")
    p.add_argument("u", type=_rational)
    p.add_argument("v", type=_rational)
    p.add_argument("--tol", type=float, default=1e-6,
                   help="maximum relative residual of f(source) vs the target")
    p.set_defaults(func=cmd_preimage)

    p = sub.add_parser("sample", help="seeded forward-containment sampling")
    p.add_argument("map", choices=catalog.MAP_NAMES)
    p.add_argument("region", help="box=LO:HI or logq=LO:HI")
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("slp", help="straight-line programs and non-scalar counts")
    p.set_defaults(func=cmd_slp)

    p = sub.add_parser("plot", help="SVG figure of the regions A, B, Q")
    p.add_argument("sets", help="comma-separated subset of A,B,Q")
    p.add_argument("out", help="output SVG path")
    p.set_defaults(func=cmd_plot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (SolveError, RootFindError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
