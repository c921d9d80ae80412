import csv
import io
import logging
import time
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, List, Optional, Tuple

from ..models import (Edge, ForbiddenFamily, Hypergraph, LagrangianCertificate,
                      SearchReport, SolverOptions, all_r_subsets)
from .canonical_utils import canonical_edges
from .config import (ACHIEVER_TOL, MAX_EDGE_SLOTS, MAX_UNFORCED_EDGE_SLOTS,
                     REPORT_SCHEMA_VERSION, SEARCH_STARTS_PER_VERTEX, VALUE_TOL)
from .containment_utils import contains, is_free_edges
from .parallel_utils import parallel_map
from .solver_lib import lagrangian

Level = List[Tuple[Edge, ...]]


class SearchSizeError(ValueError):
    """Raised when an enumeration is larger than the size guard allows."""


def check_search_size(n: int, r: int, force: bool = False) -> None:
    if n < 0 or r < 1:
        raise ValueError(f"Search needs n >= 0 and r >= 1, got n={n}, r={r}")
    slots = comb(n, r)
    if slots > MAX_EDGE_SLOTS:
        raise SearchSizeError(
            f"n={n}, r={r} has {slots} edge slots; at most {MAX_EDGE_SLOTS} are supported")
    if slots > MAX_UNFORCED_EDGE_SLOTS:
        if not force:
            raise SearchSizeError(
                f"n={n}, r={r} has {slots} edge slots (> {MAX_UNFORCED_EDGE_SLOTS}); "
                f"pass force to run it anyway")
        logging.warning("Forced search over %d edge slots; this can take a very long time", slots)


def single_edge_extensions(graph: Hypergraph) -> List[Hypergraph]:
    """Every graph obtained from ``graph`` by adding one non-edge."""
    present = graph.edge_set()
    return [Hypergraph.trusted(graph.r, graph.n, sorted(graph.edges + (e,)))
            for e in all_r_subsets(graph.n, graph.r) if e not in present]


def is_maximal_free(graph: Hypergraph, family: Optional[ForbiddenFamily]) -> bool:
    """True iff ``graph`` is family-free and every single-edge extension is not."""
    if family is None:
        return graph.edge_count == comb(graph.n, graph.r)
    if not is_free_edges(graph.n, graph.edges, family):
        return False
    return not any(is_free_edges(g.n, g.edges, family) for g in single_edge_extensions(graph))


def _expand(task: Tuple[int, int, Tuple[Edge, ...], Optional[ForbiddenFamily]]
            ) -> Tuple[List[Tuple[Edge, ...]], bool, int]:
    """Canonical free children of one graph, whether it is maximal, extensions tried."""
    n, r, edges, family = task
    present = set(edges)
    children = []
    for e in all_r_subsets(n, r):
        if e in present:
            continue
        extended = tuple(sorted(edges + (e,)))
        if family is not None and not is_free_edges(n, extended, family):
            continue
        children.append(canonical_edges(n, extended))
    return children, not children, comb(n, r) - len(edges)


def _levels(n: int, r: int, family: Optional[ForbiddenFamily], jobs: int, force: bool
            ) -> Iterator[Tuple[Level, List[bool], int]]:
    """Breadth-first canonical augmentation by edge count.

    Yields each level of canonical free graphs together with the maximality
    flag of each member and the number of labelled extensions examined.
    """
    check_search_size(n, r, force)
    if family is not None and family.r != r:
        raise ValueError(f"Uniformity mismatch: search r = {r}, family r = {family.r}")
    level: Level = [()]
    depth = 0
    while level:
        results = parallel_map(_expand, [(n, r, edges, family) for edges in level], jobs)
        yield level, [maximal for _, maximal, _ in results], sum(t for _, _, t in results)
        children = sorted({child for found, _, _ in results for child in found})
        depth += 1
        logging.debug("Level %d: %d graphs, %d children", depth - 1, len(level), len(children))
        level = children


def enumerate_graphs(n: int, r: int, jobs: int = 1, force: bool = False) -> Iterator[Hypergraph]:
    """One canonical representative per isomorphism class of r-graphs on n vertices.

    Graphs come out by edge count, and within a level in canonical edge order.
    Isolated vertices are kept.
    """
    for level, _, _ in _levels(n, r, None, jobs, force):
        for edges in level:
            yield Hypergraph.trusted(r, n, edges)


def enumerate_free(n: int, r: int, family: Optional[ForbiddenFamily], jobs: int = 1,
                   force: bool = False) -> Iterator[Hypergraph]:
    """Canonical family-free classes; a graph holding a member is never extended."""
    for level, _, _ in _levels(n, r, family, jobs, force):
        for edges in level:
            yield Hypergraph.trusted(r, n, edges)


def maximal_free(n: int, r: int, family: Optional[ForbiddenFamily], jobs: int = 1,
                 force: bool = False) -> Iterator[Hypergraph]:
    """Family-free graphs to which no edge can be added while staying free."""
    for level, flags, _ in _levels(n, r, family, jobs, force):
        for edges, maximal in zip(level, flags):
            if maximal:
                yield Hypergraph.trusted(r, n, edges)


def turan_number(n: int, r: int, family: Optional[ForbiddenFamily], jobs: int = 1,
                 force: bool = False) -> int:
    """ex(n, F): the largest edge count of a family-free r-graph on n vertices."""
    best = 0
    for level, _, _ in _levels(n, r, family, jobs, force):
        best = max(best, len(level[0]))
    return best


def _solve(task: Tuple[Hypergraph, SolverOptions]) -> LagrangianCertificate:
    graph, options = task
    return lagrangian(graph, options)


def search_options(n: int, seed: int) -> SolverOptions:
    return SolverOptions(seed=seed, starts=SEARCH_STARTS_PER_VERTEX * max(n, 1))


def max_lagrangian(n: int, r: int, family: Optional[ForbiddenFamily],
                   bound: Optional[Fraction] = None, seed: int = 0, jobs: int = 1,
                   force: bool = False, turan: bool = False) -> SearchReport:
    """Largest Lagrangian over family-free r-graphs on n vertices.

    Only maximal free graphs are solved, each with support enumeration and a
    short multistart. Achievers are all maximal graphs within ACHIEVER_TOL of
    the maximum, in canonical order.

    Args:
        n (int): Number of vertices.
        r (int): Uniformity.
        family (Optional[ForbiddenFamily]): Forbidden family; None forbids nothing.
        bound (Optional[Fraction]): Upper bound to compare against.
        seed (int): Root seed of every solve.
        jobs (int): Worker processes.
        force (bool): Allow searches beyond the unforced size guard.
        turan (bool): Also record the Turán number.

    Returns:
        SearchReport: The report.
    """
    started = time.monotonic()
    free_count = 0
    enumerated = 0
    maximal: List[Hypergraph] = []
    largest_level = 0
    for level, flags, examined in _levels(n, r, family, jobs, force):
        free_count += len(level)
        enumerated += examined
        largest_level = max(largest_level, len(level[0]))
        maximal.extend(Hypergraph.trusted(r, n, edges)
                       for edges, flag in zip(level, flags) if flag)
    options = search_options(n, seed)
    certificates = parallel_map(_solve, [(g, options) for g in maximal], jobs)
    best = max(c.value for c in certificates)
    achievers = [(g, c) for g, c in zip(maximal, certificates)
                 if c.value >= best - ACHIEVER_TOL]
    exact_values = {c.exact for _, c in achievers if c.exact is not None
                    and abs(float(c.exact) - best) <= VALUE_TOL}
    max_exact = max(exact_values) if exact_values else None
    elapsed = time.monotonic() - started
    report = SearchReport(
        schema_version=REPORT_SCHEMA_VERSION, n=n, r=r,
        family=family.label() if family is not None else "none", seed=seed,
        enumerated=enumerated, free_count=free_count, maximal_free_count=len(maximal),
        reduction_factor=free_count / len(maximal), max_value=best,
        max_value_scaled=factorial(r) * best, max_exact=max_exact,
        achievers=[g for g, _ in achievers], bound=bound,
        bound_pass=None if bound is None else best <= float(bound) + VALUE_TOL,
        turan_number=largest_level if turan else None, wall_time=elapsed)
    logging.info("Search n=%d r=%d family=%s: %d free, %d maximal, max lambda %.12g in %.2fs",
                 n, r, report.family, free_count, len(maximal), best, elapsed)
    return report


def verify_extremal_structure(report: SearchReport, pattern: Hypergraph) -> bool:
    """True iff every achiever of ``report`` contains ``pattern``."""
    if not pattern.edges and pattern.n == 0:
        return True
    return all(contains(g, pattern) is not None for g in report.achievers)


def report_to_json(report: SearchReport, include_wall_time: bool = False) -> str:
    exclude = None if include_wall_time else {"wall_time"}
    return report.model_dump_json(indent=2, exclude=exclude)


CSV_FIELDS = ("schema_version", "n", "r", "family", "seed", "enumerated", "free_count",
              "maximal_free_count", "reduction_factor", "max_value", "max_value_scaled",
              "max_exact", "achievers", "bound", "bound_pass", "turan_number")


def report_to_csv_row(report: SearchReport, header: bool = False) -> str:
    """Flat CSV summary of a report; achievers are reported as a count."""
    data = report.model_dump(mode="json")
    data["achievers"] = len(report.achievers)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_FIELDS, extrasaction="ignore",
                            lineterminator="\n")
    if header:
        writer.writeheader()
    writer.writerow({k: "" if data.get(k) is None else data[k] for k in CSV_FIELDS})
    return buffer.getvalue()

