import logging
from typing import Dict, List, Optional, Sequence, Tuple

from ..models import Edge, Hypergraph
from .config import MAX_CANONICAL_VERTICES

Colors = List[int]


def _incidence(n: int, edges: Sequence[Edge]) -> List[List[Edge]]:
    incident: List[List[Edge]] = [[] for _ in range(n + 1)]
    for e in edges:
        for u in e:
            incident[u].append(e)
    return incident


def _refine(n: int, incident: List[List[Edge]], colors: Colors) -> Colors:
    """Iterate degree/edge-incidence refinement until the partition is stable.

    Returned colours are ranks 0..k-1 and always refine the input ordering.
    """
    current = colors
    current_count = len(set(current[1:]))
    while True:
        signatures = [None] * (n + 1)
        for v in range(1, n + 1):
            seen = sorted(tuple(sorted(current[u] for u in e if u != v)) for e in incident[v])
            signatures[v] = (current[v], tuple(seen))
        ranks = {sig: i for i, sig in enumerate(sorted(set(signatures[1:])))}
        refined = [0] + [ranks[signatures[v]] for v in range(1, n + 1)]
        if len(ranks) == current_count:
            return refined
        current, current_count = refined, len(ranks)


def _is_transposition_automorphism(edge_set, edges: Sequence[Edge], u: int, v: int) -> bool:
    swap = {u: v, v: u}
    for e in edges:
        if u in e or v in e:
            if tuple(sorted(swap.get(w, w) for w in e)) not in edge_set:
                return False
    return True


def _twin_representatives(edge_set, edges: Sequence[Edge], cell: List[int]) -> List[int]:
    """One vertex per class of vertices interchangeable by a transposition."""
    representatives: List[int] = []
    for v in cell:
        if not any(_is_transposition_automorphism(edge_set, edges, rep, v)
                   for rep in representatives):
            representatives.append(v)
    return representatives


def _canonical_search(n: int, edges: Sequence[Edge],
                      colors: Optional[Colors] = None) -> Tuple[Tuple[Edge, ...], List[int]]:
    incident = _incidence(n, edges)
    edge_set = set(edges)
    start = colors if colors is not None else [0] * (n + 1)
    best: List = [None, None]

    def search(current: Colors):
        cells: Dict[int, List[int]] = {}
        for v in range(1, n + 1):
            cells.setdefault(current[v], []).append(v)
        if len(cells) == n:
            labels = [c + 1 for c in current]
            certificate = tuple(sorted(tuple(sorted(labels[u] for u in e)) for e in edges))
            if best[0] is None or certificate < best[0]:
                best[0], best[1] = certificate, labels
            return
        target = min((c for c in cells if len(cells[c]) > 1), key=lambda c: (len(cells[c]), c))
        for v in _twin_representatives(edge_set, edges, cells[target]):
            individualized = [2 * c + 1 for c in current]
            individualized[v] = 2 * current[v]
            search(_refine(n, incident, individualized))

    if n == 0:
        return (), [0]
    search(_refine(n, incident, start))
    return best[0], best[1]


def canonical_edges(n: int, edges: Sequence[Edge]) -> Tuple[Edge, ...]:
    """Canonical edge tuple of the labelled graph (hot path for enumeration)."""
    return _canonical_search(n, edges)[0]


def canonical_labeling(graph: Hypergraph) -> Dict[int, int]:
    """Return the relabelling old vertex -> new vertex used by `canonical_form`."""
    _, labels = _canonical_search(graph.n, graph.edges)
    return {v: labels[v] for v in graph.vertices()}


def canonical_form(graph: Hypergraph) -> Hypergraph:
    """Return the canonical representative of the isomorphism class of ``graph``.

    Vertex-degree refinement followed by exhaustive completion over the
    smallest non-singleton cell; the lexicographically least edge list over all
    completions is kept. Isomorphic inputs give identical outputs.

    Args:
        graph (Hypergraph): Any r-graph; n up to 12 is the supported regime.

    Returns:
        Hypergraph: The relabelled canonical copy.
    """
    if graph.n > MAX_CANONICAL_VERTICES:
        logging.warning("Canonical form requested for n = %d (> %d); this may be slow",
                        graph.n, MAX_CANONICAL_VERTICES)
    return Hypergraph.trusted(graph.r, graph.n, canonical_edges(graph.n, graph.edges))


def is_canonical(graph: Hypergraph) -> bool:
    return canonical_edges(graph.n, graph.edges) == graph.edges


def isomorphic(first: Hypergraph, second: Hypergraph) -> bool:
    if (first.r, first.n, first.edge_count) != (second.r, second.n, second.edge_count):
        return False
    return canonical_edges(first.n, first.edges) == canonical_edges(second.n, second.edges)


def automorphism_orbits(graph: Hypergraph) -> List[List[int]]:
    """Partition the vertices into orbits of the automorphism group.

    Two vertices share an orbit exactly when the graph rooted at one is
    canonically identical to the graph rooted at the other. Only vertices in
    the same refined colour cell are compared.

    Returns:
        List[List[int]]: Orbits as sorted vertex lists, ordered by least vertex.
    """
    n = graph.n
    if n == 0:
        return []
    incident = _incidence(n, graph.edges)
    refined = _refine(n, incident, [0] * (n + 1))
    cells: Dict[int, List[int]] = {}
    for v in graph.vertices():
        cells.setdefault(refined[v], []).append(v)
    orbits: List[List[int]] = []
    for cell in cells.values():
        if len(cell) == 1:
            orbits.append(cell)
            continue
        by_certificate: Dict[Tuple[Edge, ...], List[int]] = {}
        for v in cell:
            rooted = [1] * (n + 1)
            rooted[v] = 0
            certificate, _ = _canonical_search(n, graph.edges, rooted)
            by_certificate.setdefault(certificate, []).append(v)
        orbits.extend(by_certificate.values())
    return sorted(orbits)


def relabel(graph: Hypergraph, mapping: Dict[int, int]) -> Hypergraph:
    """Apply a vertex bijection 1..n -> 1..n."""
    if sorted(mapping.get(v, 0) for v in graph.vertices()) != list(graph.vertices()):
        raise ValueError("Relabelling must be a bijection of 1..n")
    edges = sorted(tuple(sorted(mapping[u] for u in e)) for e in graph.edges)
    return Hypergraph.trusted(graph.r, graph.n, edges)
