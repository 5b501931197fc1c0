"""Command line: ``qrank verify | dyson | series | list``."""

from __future__ import annotations

import argparse
import os
import sys

from qrank.verifier import REGISTRY, dyson_oracle, run_all
from qrank.verifier.catalog import SERIES, build_series
from qrank.verifier.registry import ORDER_ENV
from qrank.verifier.report import EXIT_OK, EXIT_USAGE, emit_report, exit_status


class UsageError(Exception):
    pass


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qrank", description="Exact q-series checks of the rank identities.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run registered checks")
    v.add_argument("--check", action="append", metavar="NAME", help="check to run (repeatable); default all")
    v.add_argument("--order", type=_positive, help=f"truncation order (default per check, or ${ORDER_ENV})")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    v.add_argument("--jobs", type=_positive, default=1, help="worker processes (default 1)")

    d = sub.add_parser("dyson", help="rank-class equidistribution from the partition oracle")
    d.add_argument("--mod", type=int, choices=(5, 7, 11), required=True)
    d.add_argument("--max", type=_positive, required=True, metavar="M", help="largest case examined")

    s = sub.add_parser("series", help="print coefficients of a named building block")
    s.add_argument("--name", required=True, help=f"one of: {', '.join(sorted(SERIES))}")
    s.add_argument("--order", type=_positive, default=20)

    sub.add_parser("list", help="list registered checks and what they verify")
    return ap


def _check_env():
    raw = os.environ.get(ORDER_ENV)
    if raw not in (None, ""):
        try:
            if int(raw) < 0:
                raise ValueError
        except ValueError:
            raise UsageError(f"{ORDER_ENV} must be a nonnegative integer, got {raw!r}") from None


def cmd_verify(args) -> int:
    _check_env()
    names = args.check
    if names:
        unknown = [n for n in names if n not in REGISTRY]
        if unknown:
            raise UsageError(f"unknown check(s): {', '.join(unknown)}; see `qrank list`")
    results = run_all(args.order, parallel=args.jobs > 1, names=names, jobs=args.jobs)
    text = emit_report(results, args.format, args.out)
    if args.out is None:
        sys.stdout.write(text)
    return exit_status(results)


def cmd_dyson(args) -> int:
    r = dyson_oracle(args.mod, args.max)
    print(f"dyson mod {args.mod} up to {args.max}: {r.status}")
    for line in r.details:
        print("  " + line)
    if r.reason:
        print("  " + r.reason)
    if r.first_mismatch is not None:
        m = r.first_mismatch
        print(f"  first failing case {m.exponent}: classes {m.lhs}, expected {m.rhs}")
    return exit_status([r])


def cmd_series(args) -> int:
    try:
        f = build_series(args.name, args.order)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    print(f.render())
    return EXIT_OK


def cmd_list(args) -> int:
    width = max(len(n) for n in REGISTRY)
    for name in sorted(REGISTRY):
        spec = REGISTRY[name]
        print(f"{name.ljust(width)}  order {spec.order:<4d} {spec.anchor}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    handlers = {"verify": cmd_verify, "dyson": cmd_dyson, "series": cmd_series, "list": cmd_list}
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        print(f"qrank: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
