"""Command-line entry point.

Exit codes: 0 success, 1 invalid input or usage, 2 verification failure.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys

from . import chambers as ch
from .render import render_ascii, render_svg
from .serialize import SchemaError, emit_json, parse_json
from .stability import NotGenericError, classify
from .stairs import RealizedStair, Stair, enumerate_stairs
from .tautological import verify_tautological
from .verify import run_suite

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_MISMATCH = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stairchambers", description="Stairs, chambers and tautological fibers for Z/kZ.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("stairs", help="list all stairs as JSON lines")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("chambers", help="list chambers as JSON lines")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--simple", action="store_true", help="only simple chambers")
    p.add_argument("--derived", action="store_true", help="include stairs, chamber stair and θ")

    p = sub.add_parser("simple-chambers", help="list simple chambers as JSON lines")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--derived", action="store_true")

    p = sub.add_parser("stability", help="classify a stair under θ")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--theta", required=True, help="theta document")
    p.add_argument("--stair", required=True, help="stair document")

    p = sub.add_parser("chamber-of", help="the chamber containing a generic θ")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--theta", required=True)

    p = sub.add_parser("fibers", help="tautological fiber report for a chamber")
    p.add_argument("--chamber", required=True)

    p = sub.add_parser("render", help="render a document read from stdin")
    p.add_argument("--format", choices=("ascii", "svg", "json"), required=True)

    p = sub.add_parser("verify", help="run the verification suite at k")
    p.add_argument("--k", type=int, required=True)
    return parser


def _check_k(k: int, value) -> None:
    if value.k != k:
        raise ValueError(f"--k {k} does not match the document's k={value.k}")


def _run(args, stdin, out, err) -> int:
    if args.command == "stairs":
        for s in enumerate_stairs(args.k):
            print(emit_json(s), file=out)
        return EXIT_OK

    if args.command in ("chambers", "simple-chambers"):
        simple = args.command == "simple-chambers" or args.simple
        found = ch.enumerate_simple_chambers(args.k) if simple else ch.enumerate_chambers(args.k)
        for c in found:
            print(emit_json(c, derived=args.derived), file=out)
        return EXIT_OK

    if args.command == "stability":
        theta = parse_json(args.theta, "theta")
        stair = parse_json(args.stair, "stair")
        _check_k(args.k, theta)
        _check_k(args.k, stair)
        print(classify(stair, theta).value, file=out)
        return EXIT_OK

    if args.command == "chamber-of":
        theta = parse_json(args.theta, "theta")
        _check_k(args.k, theta)
        try:
            chamber = ch.chamber_of_theta(args.k, theta)
        except NotGenericError as exc:
            print(f"not generic: {exc.witness}", file=err)
            return EXIT_INVALID
        print(emit_json(chamber, derived=True), file=out)
        return EXIT_OK

    if args.command == "fibers":
        chamber = parse_json(args.chamber, "chamber")
        report = verify_tautological(chamber)
        print(emit_json(report), file=out)
        return EXIT_OK if report.passed else EXIT_MISMATCH

    if args.command == "render":
        value = parse_json(stdin.read())
        if args.format == "json":
            print(emit_json(value), file=out)
        elif isinstance(value, (ch.Chamber, Stair, RealizedStair)):
            text = render_ascii(value) if args.format == "ascii" else render_svg(value)
            out.write(text)
        else:
            raise ValueError(f"cannot render a {type(value).__name__} as {args.format}")
        return EXIT_OK

    report = run_suite(args.k)
    for check in report.checks:
        print(check.line(), file=err)
    print(report.summary(), file=out)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def main(argv: list[str] | None = None, stdin=None, out=None, err=None) -> int:
    stdin = stdin or sys.stdin
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_INVALID
    try:
        return _run(args, stdin, out, err)
    except (SchemaError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INVALID


run_cli = main
