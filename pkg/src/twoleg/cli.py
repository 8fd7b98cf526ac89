"""Command-line entry point.

    twoleg verify <suite> --max-size N [--json] [--golden PATH]
    twoleg table <name> --format json|text [--degree D] [--golden PATH]
    twoleg predict <mu+> <mu-> --cutoff D [--json]

Partitions are comma-separated parts (``2,1``); use ``0`` or ``""`` for the
empty partition.  Exit status: 0 success, 1 verification failure, 2 usage
error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from .harness import SUITES, TABLES, UnknownName, emit_table, run_suite
from .partitions import Partition
from .series import g_predict

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twoleg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a named identity suite")
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--max-size", type=_nonnegative, required=True)
    verify.add_argument("--json", action="store_true", help="emit the report as JSON")
    verify.add_argument("--golden", type=Path, help="compare JSON output with this file")

    table = sub.add_parser("table", help="emit a deterministic table")
    table.add_argument("name", choices=TABLES)
    table.add_argument("--format", choices=("json", "text"), default="json")
    table.add_argument("--degree", type=_nonnegative, default=4,
                       help="symmetric-group degree for character-table")
    table.add_argument("--golden", type=Path, help="compare output with this file")

    predict = sub.add_parser("predict", help="connected coefficient G_{mu+,mu-}")
    predict.add_argument("mu_plus", type=_partition)
    predict.add_argument("mu_minus", type=_partition)
    predict.add_argument("--cutoff", type=_nonnegative, required=True)
    predict.add_argument("--json", action="store_true")
    return parser


def _emit(text: str, golden: Optional[Path]) -> int:
    sys.stdout.write(text)
    if golden is None:
        return EXIT_OK
    try:
        stored = golden.read_text(encoding="utf-8")
    except OSError as exc:
        print(f"cannot read golden file: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if stored != text:
        print(f"output differs from golden file {golden}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    try:
        if args.command == "verify":
            report = run_suite(args.suite, args.max_size)
            print(f"{report.summary()} ({report.elapsed:.2f}s)", file=sys.stderr)
            if args.json or args.golden:
                text = json.dumps(report.to_json(), indent=1, sort_keys=True) + "\n"
            else:
                lines = [report.summary()]
                lines += [f"  failed: {f.case_id}" for f in report.failures]
                text = "\n".join(lines) + "\n"
            status = _emit(text, args.golden)
            if status != EXIT_OK:
                return status
            return EXIT_OK if report.ok else EXIT_FAILURE

        if args.command == "table":
            return _emit(emit_table(args.name, args.format, args.degree), args.golden)

        if args.command == "predict":
            total = args.mu_plus.size + args.mu_minus.size
            if total == 0 or args.cutoff < total:
                print("need a nonempty pair with |mu+| + |mu-| <= cutoff", file=sys.stderr)
                return EXIT_USAGE
            value = g_predict(args.mu_plus, args.mu_minus, args.cutoff)
            if args.json:
                payload = {"pair": [list(args.mu_plus), list(args.mu_minus)], "predicted": value.to_json()}
                sys.stdout.write(json.dumps(payload, indent=1, sort_keys=True) + "\n")
            else:
                print(value)
            return EXIT_OK
    except (UnknownName, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
