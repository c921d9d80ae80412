import logging
from typing import Optional

from ..models import Hypergraph, LagrangianCertificate, SolverOptions
from .config import DENSE_GAP
from .hypergraph_utils import compact, isolated_vertices, remove_edge
from .solver_lib import lagrangian


def _preserves(full: LagrangianCertificate, reduced: LagrangianCertificate, gap: float) -> bool:
    if full.exact is not None and reduced.exact is not None and reduced.exact >= full.exact:
        return True
    return reduced.value >= full.value - gap


def dense_witness(graph: Hypergraph, options: Optional[SolverOptions] = None,
                  gap: float = DENSE_GAP) -> Optional[Hypergraph]:
    """A proper subgraph with the same Lagrangian, or None when ``graph`` is dense.

    By monotonicity it is enough to try G minus one edge and G minus an
    isolated vertex.
    """
    if not graph.edges:
        return Hypergraph.trusted(graph.r, 0, ()) if graph.n else None
    if graph.n >= 2 and isolated_vertices(graph):
        return compact(graph)
    full = lagrangian(graph, options)
    for e in graph.edges:
        reduced_graph = remove_edge(graph, e)
        reduced = lagrangian(reduced_graph, options)
        if _preserves(full, reduced, gap):
            logging.debug("Deleting %s from %s keeps lambda at %.12g", e, graph, reduced.value)
            return reduced_graph
    return None


def is_dense(graph: Hypergraph, options: Optional[SolverOptions] = None,
             gap: float = DENSE_GAP) -> bool:
    """True iff every proper subgraph has Lagrangian smaller by more than ``gap``.

    Args:
        graph (Hypergraph): Any r-graph.
        options (Optional[SolverOptions]): Options for the underlying solves.
        gap (float): Required drop in λ.

    Returns:
        bool: The verdict; edgeless graphs are never dense.
    """
    if not graph.edges:
        return False
    return dense_witness(graph, options, gap) is None


def dense_reduction(graph: Hypergraph, options: Optional[SolverOptions] = None,
                    gap: float = DENSE_GAP) -> Hypergraph:
    """Delete edges and isolated vertices that keep λ until the graph is dense.

    The result is a subgraph relabelled to 1..n', so it stays free of
    anything ``graph`` is free of.
    """
    current = compact(graph)
    if not current.edges:
        return current
    target = lagrangian(current, options)
    while True:
        removed = False
        for e in current.edges:
            candidate = remove_edge(current, e)
            reduced = lagrangian(candidate, options)
            if _preserves(target, reduced, gap):
                current, removed = compact(candidate), True
                break
        if not removed:
            return current
