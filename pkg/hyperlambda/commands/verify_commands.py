import argparse
import json
import logging

from ..models import LedgerStatus, SuiteLevel
from ..utils.config import REPORT_SCHEMA_VERSION
from ..utils.ledger_utils import run_suite, summarize
from .arguments import add_jobs, add_seed, emit

SUITES = ("paper",)


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify", help="Run the verification ledger")
    parser.add_argument("--suite", choices=SUITES, default="paper", help="Suite to run")
    parser.add_argument("--level", choices=[level.value for level in SuiteLevel],
                        default=SuiteLevel.QUICK.value, help="quick or full grids and searches")
    parser.add_argument("--json", default=None, dest="json_out", metavar="FILE",
                        help="Write the ledger as JSON")
    add_seed(parser)
    add_jobs(parser)
    parser.set_defaults(handler=verify_command)


def verify_command(args: argparse.Namespace) -> int:
    """Run every ledger entry and print one line per entry.

    Args:
        args (argparse.Namespace): Parsed `verify` arguments.

    Returns:
        int: 0 when nothing failed, 1 otherwise.
    """
    level = SuiteLevel(args.level)
    entries = run_suite(level, seed=args.seed, jobs=args.jobs)
    counts = summarize(entries)
    for entry in entries:
        line = f"{entry.status.value.upper():<8} {entry.id}"
        if entry.detail:
            line += f"  ({entry.detail})"
        print(line)
    print(f"{counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped")
    if args.json_out:
        document = {
            "schema_version": REPORT_SCHEMA_VERSION,
            "suite": args.suite,
            "level": level.value,
            "seed": args.seed,
            "summary": counts,
            "entries": [entry.model_dump(mode="json") for entry in entries],
        }
        emit(json.dumps(document, indent=2), args.json_out)
    failed = [entry for entry in entries if entry.status is LedgerStatus.FAIL]
    for entry in failed:
        logging.error("Ledger entry %s failed: %s", entry.id, entry.witness)
    return 1 if failed else 0
