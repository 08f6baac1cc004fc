"""Command-line front end: ``eval``, ``transcript`` and ``suite``.

Exit codes: 0 success, 1 verification failure, 2 parse/type error,
3 domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from .dsl import DslError, evaluate
from .verify import DEFAULT_CASES, SUITES, run_suite, run_transcript

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        print(f"{name} must be an integer, got {raw!r}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _json_value(value):
    return value if isinstance(value, bool) else str(value)


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_eval(args) -> int:
    source = args.expr if args.expr is not None else sys.stdin.read()
    source = source.strip()
    try:
        outcome = evaluate(source)
    except DslError as exc:
        if args.format == "json":
            print(json.dumps({"ok": False, "error": exc.kind, "message": exc.message,
                              "line": exc.line, "column": exc.column}, indent=2))
        else:
            print(str(exc), file=sys.stderr)
            line = source.splitlines()[exc.line - 1] if source else ""
            print(f"  {line}\n  {' ' * (exc.column - 1)}^", file=sys.stderr)
        return exc.exit_code
    payload = {"ok": True, "echo": outcome.echo, "value": _json_value(outcome.value),
               "diagnostics": outcome.diagnostics}
    text = f"{outcome.echo}\n= {outcome.value_text()}"
    for note in outcome.diagnostics:
        text += f"\nnote: {note}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_transcript(args) -> int:
    report = run_transcript()
    _emit(args, report.to_dict(), report.to_text())
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_suite(args) -> int:
    seed = args.seed if args.seed is not None else (_env_int("TM_SEED") or 0)
    cases = args.cases if args.cases is not None else _env_int("TM_CASES")
    if cases is not None and cases < 1:
        print("--cases must be positive", file=sys.stderr)
        return EXIT_PARSE
    report = run_suite(args.name, seed, cases)
    _emit(args, report.to_dict(), report.to_text())
    return EXIT_OK if report.ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="prodmeasure",
        description="Exact product measures on tame subsets of [0,1] x R.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate one query")
    p.add_argument("expr", nargs="?", help="query text; read from stdin when omitted")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("transcript", parents=[common],
                       help="check the fixed table of diagonal and rectangle values")
    p.set_defaults(func=cmd_transcript)

    p = sub.add_parser("suite", parents=[common], help="run a randomized property suite")
    p.add_argument("name", choices=SUITES)
    p.add_argument("--seed", type=int, default=None, help="RNG seed (env TM_SEED, default 0)")
    p.add_argument("--cases", type=int, default=None,
                   help="number of cases (env TM_CASES, default per suite: "
                        + ", ".join(f"{k}={v}" for k, v in DEFAULT_CASES.items()) + ")")
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
