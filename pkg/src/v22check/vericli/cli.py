"""Command line entry point: ``verify``."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from ..exactalg import ParseError, UndeclaredVariable, parse
from ..paperdata import catalog
from ..torusgeom import COORDS
from .registry import list_checks
from .runner import RunConfig, UsageError, run, to_structured, to_text

EVAL_VARS = COORDS + ("a", "b")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="verify", description="Exact verification of the V22 computations.")
    p.add_argument("--check", action="append", default=[], metavar="ID", help="run only this check (repeatable)")
    p.add_argument("--u", action="append", default=[], type=_fraction, metavar="P/Q",
                   help="specialize the parameter (repeatable); default is generic u")
    p.add_argument("--allow-singular", action="store_true", help="permit u = 1")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--jobs", type=int, default=1, metavar="N")
    p.add_argument("--eval", metavar="EXPR", help="parse and print a polynomial in x,y,z,t,w,a,b and catalog names")
    p.add_argument("--list", action="store_true", help="list the registered checks")
    p.add_argument("--verbose", "-v", action="store_true", help="print passing sub-checks too")
    return p


def _eval_names():
    names = {}
    for name, poly in catalog().polys.items():
        if set(poly.vars) <= set(EVAL_VARS):
            names[name] = poly.with_vars(EVAL_VARS)
    names.update(catalog().scalars)
    return names


def evaluate(expr: str, u_values=()) -> list:
    poly = parse(expr, EVAL_VARS, catalog().radicals, _eval_names()).drop_unused()
    if not u_values:
        return [str(poly)]
    return [f"u = {u}: {poly.specialize_u(u).drop_unused()}" for u in u_values]


def _join_negative(argv):
    """Let ``--u -2`` through: argparse would read -2 as an option."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--u" and i + 1 < len(argv) and argv[i + 1][:1] == "-" and argv[i + 1][1:2].isdigit():
            out.append(f"--u={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _join_negative(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.list:
        for cid, desc, ref in list_checks():
            print(f"{cid:<36} {desc}  ({ref})")
        return 0
    if args.eval is not None:
        bad = [u for u in args.u if u == 0 or (u == 1 and not args.allow_singular)]
        if bad:
            print(f"verify: error: excluded value u = {bad[0]}", file=sys.stderr)
            return 2
        try:
            for line in evaluate(args.eval, args.u):
                print(line)
        except (ParseError, UndeclaredVariable) as exc:
            print(f"verify: error: {exc}", file=sys.stderr)
            return 2
        return 0
    config = RunConfig(tuple(args.check), tuple(args.u), args.format, args.jobs, args.allow_singular)
    try:
        report = run(config)
    except UsageError as exc:
        print(f"verify: error: {exc}", file=sys.stderr)
        return 2
    out = to_structured(report) if args.format == "structured" else to_text(report, args.verbose)
    sys.stdout.write(out)
    return 0 if report.status == "PASS" else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
