"""Command line front end.

    padic-bruhat decompose '[["9","0","1"],["1","0","0"],["3","1","0"]]' --p 3
    padic-bruhat verify bruhat-oracle --n 4

JSON goes to standard output, a one-line summary to standard error.
Exit codes: 0 success, 1 malformed input, 2 singular to precision,
3 insufficient precision, 4 unknown suite, 5 suite reported failures.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .decomp import rb_decompose
from .errors import InsufficientPrecision, SingularToPrecision
from .matrix import PMatrix
from .suites import SUITES, RunConfig, run_suite

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_SINGULAR = 2
EXIT_PRECISION = 3
EXIT_UNKNOWN_SUITE = 4
EXIT_FAILURES = 5

CONFIG_KEYS = ("p", "n", "precision", "seed", "trials", "preset", "chi", "valwindow")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_config_flags(ap: argparse.ArgumentParser) -> None:
    ap.add_argument("--p", type=int, help="the prime")
    ap.add_argument("--n", type=int, help="matrix size")
    ap.add_argument("--precision", type=int, help="relative p-adic digits")
    ap.add_argument("--seed", type=int, help="base seed (BRUHAT_SEED overrides)")
    ap.add_argument("--trials", type=int, help="trials per suite case")
    ap.add_argument("--preset", help="Weyl ordering preset: default or paper-n3")
    ap.add_argument("--chi", help='character JSON, e.g. {"p":3,"m":1,"chi":[{"c":"1","e":0},...]}')
    ap.add_argument("--valwindow", type=int, help="valuation window V for samplers")
    ap.add_argument("--config", help="JSON file with any of the keys above")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="padic-bruhat", description="Iwahori-type decompositions of GL_n(Q_p) and checks on them.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)
    dec = sub.add_parser("decompose", help="factor a matrix as r·b")
    dec.add_argument("matrix", help="JSON matrix of rational strings, a file holding one, or - for stdin")
    _add_config_flags(dec)
    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", help=", ".join(SUITES))
    _add_config_flags(ver)
    return ap


def resolve_config(args: argparse.Namespace, environ=os.environ) -> RunConfig:
    data: dict = {}
    if args.config:
        with open(args.config) as fh:
            data.update(json.load(fh))
    for key in CONFIG_KEYS:
        val = getattr(args, key, None)
        if val is not None:
            data[key] = val
    if isinstance(data.get("chi"), str):
        data["chi"] = json.loads(data["chi"])
    if environ.get("BRUHAT_SEED"):
        data["seed"] = int(environ["BRUHAT_SEED"])
    return RunConfig.from_json(data)


def _read_matrix(arg: str):
    if arg == "-":
        return json.load(sys.stdin)
    if os.path.exists(arg):
        with open(arg) as fh:
            return json.load(fh)
    return json.loads(arg)


def cmd_decompose(args, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    try:
        cfg = resolve_config(args)
        rows = _read_matrix(args.matrix)
        g = PMatrix.from_rationals(rows, cfg.p, cfg.precision)
    except (ValueError, TypeError, KeyError, ZeroDivisionError, OSError) as exc:
        print(f"malformed input: {exc}", file=err)
        return EXIT_MALFORMED
    try:
        d = rb_decompose(g)
    except SingularToPrecision as exc:
        print(f"singular to precision: {exc}", file=err)
        return EXIT_SINGULAR
    except InsufficientPrecision as exc:
        print(f"insufficient precision: {exc}", file=err)
        return EXIT_PRECISION
    json.dump(d.to_json(), out)
    out.write("\n")
    print(f"w = {d.w}", file=err)
    return EXIT_OK


def cmd_verify(args, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    if args.suite not in SUITES:
        print(f"unknown suite {args.suite!r}; expected one of {', '.join(SUITES)}", file=err)
        return EXIT_UNKNOWN_SUITE
    try:
        cfg = resolve_config(args)
    except (ValueError, TypeError, OSError) as exc:
        print(f"malformed configuration: {exc}", file=err)
        return EXIT_MALFORMED
    start = time.perf_counter()
    try:
        rep = run_suite(args.suite, cfg)
    except ValueError as exc:
        print(f"malformed configuration: {exc}", file=err)
        return EXIT_MALFORMED
    body = rep.to_json()
    body["config"] = cfg.to_json()
    json.dump(body, out)
    out.write("\n")
    elapsed = time.perf_counter() - start
    print(f"{rep.suite}: {rep.trials} trials, {len(rep.failures)} failures, "
          f"{rep.precision_aborts} precision aborts ({elapsed:.1f}s)", file=err)
    return EXIT_OK if rep.ok else EXIT_FAILURES


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    if args.command == "decompose":
        return cmd_decompose(args)
    return cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
