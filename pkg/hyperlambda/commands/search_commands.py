import argparse

from ..models import format_fraction
from ..utils.search_utils import (max_lagrangian, report_to_csv_row, report_to_json,
                                  turan_number)
from .arguments import add_jobs, add_seed, emit, rational, resolve_family


def register(subparsers) -> None:
    parser = subparsers.add_parser("search", help="Maximum Lagrangian over family-free graphs")
    _add_size(parser)
    parser.add_argument("--bound", type=rational, default=None,
                        help='Upper bound to check, e.g. "2/27"')
    parser.add_argument("--turan", action="store_true", help="Also report the Turán number")
    parser.add_argument("--out", default=None, help="Write the JSON report to FILE")
    parser.add_argument("--csv", default=None, dest="csv_out",
                        help="Write a one-row CSV summary to FILE")
    parser.add_argument("--timings", action="store_true",
                        help="Include the wall time in the JSON report")
    add_seed(parser)
    add_jobs(parser)
    parser.set_defaults(handler=search_command)

    parser = subparsers.add_parser("turan", help="Turán number ex(n, F)")
    _add_size(parser)
    add_jobs(parser)
    parser.set_defaults(handler=turan_command)


def _add_size(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, required=True, help="Number of vertices")
    parser.add_argument("--r", type=int, default=3, help="Uniformity (default 3)")
    parser.add_argument("--forbid", default=None,
                        help="Comma-separated construction names or .hg files")
    parser.add_argument("--force", action="store_true",
                        help="Allow enumerations above the unforced size guard")


def search_command(args: argparse.Namespace) -> int:
    """Run the exhaustive search and report the maximum.

    Args:
        args (argparse.Namespace): Parsed `search` arguments.

    Returns:
        int: 1 when a bound was given and violated, else 0.
    """
    family = resolve_family(args.forbid)
    report = max_lagrangian(args.n, args.r, family, bound=args.bound, seed=args.seed,
                            jobs=args.jobs, force=args.force, turan=args.turan)
    if args.out:
        emit(report_to_json(report, include_wall_time=args.timings), args.out)
    if args.csv_out:
        emit(report_to_csv_row(report, header=True), args.csv_out)
    lines = [
        f"family: {report.family}",
        f"n: {report.n}  r: {report.r}  seed: {report.seed}",
        f"enumerated: {report.enumerated}  free: {report.free_count}  "
        f"maximal: {report.maximal_free_count}  reduction: {report.reduction_factor:.3g}",
        f"max lambda: {report.max_value!r}"
        + (f" = {format_fraction(report.max_exact)}" if report.max_exact is not None else ""),
        f"r! * max lambda: {report.max_value_scaled!r}",
        f"achievers: {len(report.achievers)}",
    ]
    lines.extend(f"  {graph}" for graph in report.achievers)
    if report.turan_number is not None:
        lines.append(f"turan number: {report.turan_number}")
    if report.bound is not None:
        lines.append(f"bound {format_fraction(report.bound)}: "
                     f"{'pass' if report.bound_pass else 'FAIL'}")
    lines.append(f"wall time: {report.wall_time:.2f}s")
    print("\n".join(lines))
    return 0 if report.bound_pass is not False else 1


def turan_command(args: argparse.Namespace) -> int:
    family = resolve_family(args.forbid)
    value = turan_number(args.n, args.r, family, jobs=args.jobs, force=args.force)
    print(f"ex({args.n}, {family.label() if family else 'none'}) = {value}")
    return 0
