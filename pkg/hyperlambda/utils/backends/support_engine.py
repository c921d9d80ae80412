import logging
from itertools import combinations
from math import comb
from typing import Dict, Iterator, List, Tuple

import networkx as nx
import numpy as np

from ...models import Edge, Hypergraph, LagrangianCertificate, SolverMethod, SolverOptions
from ..canonical_utils import canonical_edges
from ..config import VALUE_TOL
from ..hypergraph_utils import covers_pairs, induced_subgraph
from ..lagrangian_utils import _poly, edge_array, staged_ascend_array
from .base_engine import BaseSolverEngine

MAX_CERTIFIED_SUPPORTS = 8


def shadow_graph(graph: Hypergraph) -> nx.Graph:
    """The 2-shadow: i ~ j when some edge holds both."""
    shadow = nx.Graph()
    shadow.add_nodes_from(graph.vertices())
    for e in graph.edges:
        shadow.add_edges_from(combinations(e, 2))
    return shadow


def candidate_supports(graph: Hypergraph) -> Iterator[Tuple[int, ...]]:
    """Vertex sets whose induced subgraph covers pairs, by size then lexicographically.

    Such a set is a clique of the 2-shadow, so only shadow cliques are tested.
    """
    cliques = sorted((tuple(sorted(c)) for c in nx.enumerate_all_cliques(shadow_graph(graph))
                      if len(c) >= graph.r), key=lambda c: (len(c), c))
    for support in cliques:
        sub = induced_subgraph(graph, support)
        if sub.edges and covers_pairs(sub):
            yield support


class SupportEnumSolverEngine(BaseSolverEngine):
    """Per-support ascent over every candidate support of a small graph.

    An optimal weighting can always be taken on a support S whose induced
    subgraph covers pairs, so only those supports are tried. Each runs from
    uniform weights on S, which keeps automorphic vertices tied. Supports with
    isomorphic induced subgraphs are solved once.
    """

    method = SolverMethod.SUPPORT_ENUM

    def applies(self, graph: Hypergraph, options: SolverOptions) -> bool:
        return (options.use_support_enum and bool(graph.edges)
                and graph.n <= options.support_enum_threshold)

    def solve(self, graph: Hypergraph, options: SolverOptions) -> List[LagrangianCertificate]:
        solved: Dict[Tuple, None] = {}
        found: List[Tuple[float, np.ndarray]] = []
        for support in candidate_supports(graph):
            sub = induced_subgraph(graph, support)
            size = len(support)
            if sub.edge_count == comb(size, graph.r):
                key: Tuple = (size, "complete")
            else:
                key = (size, canonical_edges(sub.n, sub.edges))
            if key in solved:
                continue
            solved[key] = None
            sub_edges = edge_array(sub)
            x, _, _ = staged_ascend_array(sub_edges, sub.r, sub.n,
                                          np.full(sub.n, 1.0 / sub.n),
                                          options.tol, options.max_iters)
            lifted = np.zeros(graph.n)
            lifted[[v - 1 for v in support]] = x
            found.append((_poly(sub_edges, x), lifted))
        logging.debug("Support enumeration solved %d support classes of %s", len(solved), graph)
        if not found:
            return []
        top = max(value for value, _ in found)
        leaders = [x for value, x in found if value >= top - VALUE_TOL][:MAX_CERTIFIED_SUPPORTS]
        return [self.certify(graph, x, options, starts_used=len(solved)) for x in leaders]
