import argparse
import logging
import os
from fractions import Fraction
from typing import List, Optional

from ..models import ForbiddenFamily, Hypergraph
from ..utils.config import DEFAULT_JOBS, DEFAULT_SEED
from ..utils.constructions import as_family, build
from ..utils.io_utils import read_graph


def add_seed(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help=f"Root seed of every random choice (default {DEFAULT_SEED})")


def add_jobs(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--jobs", type=int, default=DEFAULT_JOBS,
                        help=f"Worker processes (default {DEFAULT_JOBS})")


def rational(text: str) -> Fraction:
    """argparse type for "p/q" or decimal bounds."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from e


def resolve_graph(token: str) -> Hypergraph:
    """A graph from a file path, or from a gallery name when no such file exists."""
    if os.path.exists(token):
        return read_graph(token)
    built = build(token)
    if isinstance(built, ForbiddenFamily):
        raise ValueError(f"{token!r} names a family, not a single graph")
    return built


def resolve_family(tokens: Optional[str]) -> Optional[ForbiddenFamily]:
    """Comma-separated gallery names and .hg paths merged into one family.

    Gallery names carry their own commas ("K:4,3"), so a piece that does not
    stand on its own is joined to the previous one.
    """
    if not tokens:
        return None
    members: List[Hypergraph] = []
    labels: List[str] = []
    pending = ""
    for piece in tokens.split(","):
        candidate = f"{pending},{piece}" if pending else piece
        if not os.path.exists(candidate) and ":" in candidate and not _complete(candidate):
            pending = candidate
            continue
        pending = ""
        if os.path.exists(candidate):
            members.append(read_graph(candidate))
            labels.append(os.path.basename(candidate))
        else:
            family = as_family(candidate)
            members.extend(family.members)
            labels.append(family.label())
    if pending:
        raise ValueError(f"Incomplete family name {pending!r}")
    family = ForbiddenFamily(members=members, name="+".join(labels))
    logging.debug("Resolved family %s with %d members", family.label(), len(members))
    return family


def _complete(name: str) -> bool:
    # pylint: disable=import-outside-toplevel
    from ..utils.constructions import GALLERY
    base, _, raw = name.partition(":")
    expected = GALLERY.get(base, (None, ()))[1]
    return len([p for p in raw.split(",") if p.strip()]) >= len(expected)


def emit(text: str, path: Optional[str]) -> None:
    """Print ``text``, or write it to ``path`` when one is given ("-" is stdout)."""
    if path is None or path == "-":
        print(text, end="" if text.endswith("\n") else "\n")
        return
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text if text.endswith("\n") else text + "\n")
    logging.info("Wrote %s", path)
