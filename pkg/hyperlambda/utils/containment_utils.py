from typing import FrozenSet, List, Optional, Sequence

from ..models import Edge, Embedding, ForbiddenFamily, Hypergraph


def _degrees(n: int, edges: Sequence[Edge]) -> List[int]:
    counts = [0] * (n + 1)
    for e in edges:
        for u in e:
            counts[u] += 1
    return counts


def _search_embedding(pattern_n: int, pattern_edges: Sequence[Edge], order: Sequence[int],
                      host_n: int, host_edges: Sequence[Edge],
                      host_edge_set: FrozenSet[Edge]) -> Optional[List[int]]:
    """Backtracking over pattern vertices in ``order``; host candidates ascend.

    Returns the image list indexed by pattern vertex (index 0 unused), or None.
    """
    if pattern_n > host_n or len(pattern_edges) > len(host_edges):
        return None
    position = {p: i for i, p in enumerate(order)}
    # each pattern edge is checked once its last vertex (in ``order``) is placed
    closing: List[List[Edge]] = [[] for _ in range(pattern_n + 1)]
    for e in pattern_edges:
        closing[max(e, key=lambda p: position[p])].append(e)
    pattern_degree = _degrees(pattern_n, pattern_edges)
    host_degree = _degrees(host_n, host_edges)
    image = [0] * (pattern_n + 1)
    used = [False] * (host_n + 1)

    def extend(depth: int) -> bool:
        if depth == len(order):
            return True
        p = order[depth]
        for h in range(1, host_n + 1):
            if used[h] or host_degree[h] < pattern_degree[p]:
                continue
            image[p] = h
            if all(tuple(sorted(image[q] for q in e)) in host_edge_set for e in closing[p]):
                used[h] = True
                if extend(depth + 1):
                    return True
                used[h] = False
        image[p] = 0
        return False

    return image if extend(0) else None


def contains(host: Hypergraph, pattern: Hypergraph) -> Optional[Embedding]:
    """Find the lexicographically least embedding of ``pattern`` into ``host``.

    Containment is non-induced: an injective vertex map sending every pattern
    edge to a host edge. Isolated pattern vertices still need distinct images.

    Args:
        host (Hypergraph): The host graph.
        pattern (Hypergraph): The pattern graph, same uniformity.

    Returns:
        Optional[Embedding]: The embedding, or None when the host is pattern-free.
    """
    if host.r != pattern.r:
        raise ValueError(f"Uniformity mismatch: host r = {host.r}, pattern r = {pattern.r}")
    image = _search_embedding(pattern.n, pattern.edges, list(pattern.vertices()),
                              host.n, host.edges, host.edge_set())
    if image is None:
        return None
    return Embedding(mapping=tuple(image[1:]))


def _search_order(pattern_n: int, pattern_edges: Sequence[Edge]) -> List[int]:
    """High-degree-first order that keeps each new vertex attached to placed ones."""
    degree = _degrees(pattern_n, pattern_edges)
    remaining = set(range(1, pattern_n + 1))
    order: List[int] = []
    while remaining:
        placed = set(order)
        attached = [v for v in remaining
                    if any(v in e and placed.intersection(e) for e in pattern_edges)]
        pool = attached or list(remaining)
        v = max(pool, key=lambda u: (degree[u], -u))
        order.append(v)
        remaining.discard(v)
    return order


def has_copy(host_n: int, host_edges: Sequence[Edge], pattern: Hypergraph) -> bool:
    """Boolean containment on raw edges; used on the enumeration hot path."""
    return _search_embedding(pattern.n, pattern.edges, _search_order(pattern.n, pattern.edges),
                             host_n, host_edges, frozenset(host_edges)) is not None


def is_free(host: Hypergraph, family: ForbiddenFamily) -> bool:
    """True iff ``host`` contains no member of ``family``."""
    if host.r != family.r:
        raise ValueError(f"Uniformity mismatch: host r = {host.r}, family r = {family.r}")
    return not any(has_copy(host.n, host.edges, member) for member in family.members)


def is_free_edges(n: int, edges: Sequence[Edge], family: ForbiddenFamily) -> bool:
    return not any(has_copy(n, edges, member) for member in family.members)
