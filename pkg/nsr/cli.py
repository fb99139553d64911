"""Command-line entry point: ``nsr checks``, ``nsr verify`` and ``nsr function``."""
# Built-in Imports
import argparse
import logging
import pathlib
import sys
from typing import Dict, List, Optional, Sequence

# Internal Imports
from . import _logger
from ._debug import debug
from .exceptions import NSRError
from .records import JSONRecord
from .specialfn import FunctionTag, ParamPoint, build_function
from .states import CheckSpec
from .utils import output_location, split_assignment
from .verify import all_entries, build_suite, emit_report, run_suite
from .verify.harness import SUITES

logger: logging.Logger = _logger.getLogger("nsr")


def _assignments(values: Optional[List[str]]) -> Dict[str, str]:
    params: Dict[str, str] = {}
    for text in values or []:
        name, value = split_assignment(text)
        params[name] = value
    return params


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="nsr", description="Series expansions and identity checks for non-stationary Ruijsenaars functions."
    )
    parser.add_argument("--log-file", type=pathlib.Path, default=None, help="Also log to a rotating file")
    parser.add_argument("--debug", action="store_true", help="DEBUG level on every nsr logger")
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("checks", help="List the registered checks with their kind")

    verify = commands.add_parser("verify", help="Run identity checks and write a report")
    target = verify.add_mutually_exclusive_group(required=True)
    target.add_argument("--check", help="Name of one check (see `nsr checks`)")
    target.add_argument("--suite", choices=SUITES, help="Every check of a kind at its default N")
    verify.add_argument("--n", type=int, default=2, help="Rank N (default: 2)")
    verify.add_argument("--order", type=int, default=None, help="Truncation order D")
    verify.add_argument("--sigma-order", type=int, default=None, help="Spectral order for dual expansions")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--trials", type=int, default=1)
    verify.add_argument(
        "--param",
        action="append",
        default=None,
        help="Explicit parameter such as q=1/3 or s=1/2,2/5. Repeatable; disables resampling.",
    )
    verify.add_argument("--out", type=pathlib.Path, default=pathlib.Path("report.json"))
    verify.add_argument("--csv", dest="csv", action="store_true", default=None, help="Write a CSV summary")
    verify.add_argument("--no-csv", dest="csv", action="store_false", default=None)
    verify.add_argument("--jobs", type=int, default=None, help="Worker processes")

    function = commands.add_parser("function", help="Write the canonical JSON of one series")
    function.add_argument("--tag", required=True, choices=[t.value for t in FunctionTag])
    function.add_argument("--n", type=int, default=2)
    function.add_argument("--order", type=int, required=True)
    function.add_argument("--param", action="append", default=None, help="name=value, repeatable")
    function.add_argument("--out", type=pathlib.Path, default=pathlib.Path("series.json"))

    return parser.parse_args(argv)


def list_checks() -> int:
    for name, entry in all_entries().items():
        print(f"{name:<24} {entry.kind.value:<11} {entry.description}")
    return 0


def verify(args: argparse.Namespace) -> int:
    if args.check:
        specs = [
            CheckSpec(
                name=args.check,
                n=args.n,
                order=args.order,
                sigma_order=args.sigma_order,
                seed=args.seed,
                trials=args.trials,
                params=_assignments(args.param),
            )
        ]
    else:
        specs = build_suite(args.suite, seed=args.seed, trials=args.trials)

    reports = run_suite(specs, jobs=args.jobs, progress=len(specs) > 1)
    code = emit_report(reports, args.out, csv=args.csv)
    counts: Dict[str, int] = {}
    for report in reports:
        counts[report.status] = counts.get(report.status, 0) + 1
    summary = ", ".join(f"{status}={count}" for status, count in sorted(counts.items()))
    print(f"[nsr-verify] {len(reports)} checks ({summary}) -> {args.out}, exit {code}")
    return code


def function(args: argparse.Namespace) -> int:
    tag = FunctionTag(args.tag)
    try:
        point = ParamPoint.from_mapping(args.n, _assignments(args.param))
    except ValueError as e:
        raise NSRError(f"invalid parameters: {e}") from e
    series = build_function(tag, point, args.order)

    dir, stem = output_location(args.out)
    record = JSONRecord(dir, stem, key="series")
    record.write({"data": {"tag": tag.value, "params": point.as_record(), **series.to_dict()}})
    record.close()
    print(f"[nsr-function] {tag.value} N={args.n} D={args.order}: {len(series)} terms -> {args.out}")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = parse_args(argv)
    if args.debug:
        debug()
    if args.log_file:
        handler = _logger.add_file_handler(logging.getLogger("nsr"), str(args.log_file))
        for name in _logger.LOGGING_CONFIG["loggers"]:
            if name != "nsr":
                logging.getLogger(name).addHandler(handler)

    try:
        if args.command == "checks":
            return list_checks()
        if args.command == "verify":
            return verify(args)
        return function(args)
    except NSRError as err:
        print(f"[error] {type(err).__name__}: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"[error] {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
