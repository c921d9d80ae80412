import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from . import __version__
from .commands import construct_commands, graph_commands, search_commands, verify_commands
from .models import RunConfig
from .utils.config import REPORT_SCHEMA_VERSION

COMMAND_GROUPS = (graph_commands, construct_commands, search_commands, verify_commands)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperlambda",
        description="Lagrangians of r-uniform hypergraphs, extremal search and "
                    "proof-envelope verification")
    parser.add_argument("--version", action="version",
                        version=f"hyperlambda {__version__} (report schema "
                                f"{REPORT_SCHEMA_VERSION})")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for progress, -vv for debug output")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for group in COMMAND_GROUPS:
        group.register(subparsers)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format='%(asctime)s - %(levelname)s - %(message)s',
                        force=True)


def _run_config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(command=args.command,
                     seed=getattr(args, "seed", 0),
                     jobs=getattr(args, "jobs", 1),
                     tol=getattr(args, "tol", None),
                     out=getattr(args, "out", None),
                     json_out=getattr(args, "json_out", None),
                     csv_out=getattr(args, "csv_out", None),
                     force=getattr(args, "force", False))


def dispatch(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv``, run one command and return its exit status.

    Malformed input files, flags or parameters give 2, verify failures and
    bound violations give 1.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    _configure_logging(args.verbose)
    try:
        config = _run_config(args)
    except ValidationError as e:
        print(f"error: {e.errors()[0]['loc'][0]}: {e.errors()[0]['msg']}", file=sys.stderr)
        return 2
    logging.debug("Run configuration: %s", config.model_dump_json())
    try:
        return args.handler(args)
    except (ValueError, OSError) as e:
        logging.error("%s failed: %s", args.command, e)
        print(f"error: {e}", file=sys.stderr)
        return 2
    except RuntimeError as e:
        # worker failures and internal consistency checks
        logging.exception("%s aborted: %s", args.command, e)
        print(f"error: {e}", file=sys.stderr)
        return 2


def run():
    """Console entry point."""
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    run()
