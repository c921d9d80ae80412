import logging
from fractions import Fraction
from typing import List, Tuple

import networkx as nx
import numpy as np

from ...models import Hypergraph, LagrangianCertificate, SolverMethod, SolverOptions
from .base_engine import BaseSolverEngine


def to_networkx(graph: Hypergraph) -> nx.Graph:
    if graph.r != 2:
        raise ValueError(f"Only 2-graphs convert to networkx graphs, got r = {graph.r}")
    g = nx.Graph()
    g.add_nodes_from(graph.vertices())
    g.add_edges_from(graph.edges)
    return g


def maximum_clique(graph: Hypergraph) -> Tuple[int, ...]:
    """A maximum clique of a 2-graph, as a sorted vertex tuple."""
    g = to_networkx(graph)
    if graph.n == 0:
        return ()
    clique, _ = nx.max_weight_clique(g, weight=None)
    return tuple(sorted(clique))


def motzkin_straus(graph: Hypergraph) -> Fraction:
    """Exact λ(G) = (1 - 1/ω(G)) / 2 for a 2-graph with clique number ω."""
    omega = len(maximum_clique(graph))
    if omega == 0:
        return Fraction(0)
    return Fraction(omega - 1, 2 * omega)


class CliqueSolverEngine(BaseSolverEngine):
    """Exact oracle for 2-graphs: uniform weights on a maximum clique."""

    method = SolverMethod.MOTZKIN_STRAUS
    exact_oracle = True

    def applies(self, graph: Hypergraph, options: SolverOptions) -> bool:
        return graph.r == 2 and bool(graph.edges) and options.use_exact_oracle

    def solve(self, graph: Hypergraph, options: SolverOptions) -> List[LagrangianCertificate]:
        clique = maximum_clique(graph)
        omega = len(clique)
        logging.debug("Clique number of %s is %d", graph, omega)
        x = np.zeros(graph.n)
        x[[v - 1 for v in clique]] = 1.0 / omega
        exact_weights = [Fraction(1, omega) if v in clique else Fraction(0)
                         for v in graph.vertices()]
        return [self.certify(graph, x, options, polish=False,
                             exact=Fraction(omega - 1, 2 * omega),
                             exact_weights=exact_weights)]
