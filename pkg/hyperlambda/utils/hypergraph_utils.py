import logging
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from ..models import Edge, Hypergraph, all_r_subsets


def _check_vertex(graph: Hypergraph, v: int) -> None:
    if not 1 <= v <= graph.n:
        raise ValueError(f"Vertex {v} is outside 1..{graph.n}")


def _check_same_uniformity(first: Hypergraph, second: Hypergraph) -> None:
    if first.r != second.r:
        raise ValueError(f"Uniformity mismatch: {first.r} vs {second.r}")


def link(graph: Hypergraph, v: int) -> Hypergraph:
    """Return the link N(v) as an (r-1)-graph on the same vertex set.

    Args:
        graph (Hypergraph): The host r-graph.
        v (int): The vertex whose link is taken; it is isolated in the result.

    Returns:
        Hypergraph: ``{S : S ∪ {v} ∈ E(G)}`` with uniformity r - 1.
    """
    _check_vertex(graph, v)
    if graph.r < 2:
        raise ValueError("The link of a 1-graph is not a hypergraph")
    remainders = sorted(tuple(u for u in e if u != v) for e in graph.edges if v in e)
    return Hypergraph.trusted(graph.r - 1, graph.n, remainders)


def pair_link(graph: Hypergraph, a: int, b: int) -> Set[Edge]:
    """Return N(a, b), the (r-2)-sets completing {a, b} to an edge."""
    _check_vertex(graph, a)
    _check_vertex(graph, b)
    if a == b:
        raise ValueError(f"Pair link needs two distinct vertices, got {a} twice")
    return {tuple(u for u in e if u not in (a, b)) for e in graph.edges if a in e and b in e}


def covered_pairs(graph: Hypergraph) -> Set[Tuple[int, int]]:
    covered = set()
    for e in graph.edges:
        covered.update(combinations(e, 2))
    return covered


def uncovered_pairs(graph: Hypergraph, within: Optional[Iterable[int]] = None
                    ) -> List[Tuple[int, int]]:
    covered = covered_pairs(graph)
    vertices = graph.vertices() if within is None else sorted(set(within))
    return [p for p in combinations(vertices, 2) if p not in covered]


def covers_pairs(graph: Hypergraph, within: Optional[Iterable[int]] = None) -> bool:
    """True iff every pair of vertices (of ``within`` when given) lies in some edge."""
    return not uncovered_pairs(graph, within)


def link_difference(graph: Hypergraph, j: int, i: int) -> Set[Edge]:
    """Return L_G(j \\ i): (r-1)-sets e avoiding i with e+j an edge and e+i not an edge."""
    _check_vertex(graph, j)
    _check_vertex(graph, i)
    if i == j:
        raise ValueError(f"Link difference needs distinct vertices, got {i} twice")
    edges = graph.edge_set()
    result = set()
    for e in graph.edges:
        if j not in e or i in e:
            continue
        rest = tuple(u for u in e if u != j)
        if tuple(sorted(rest + (i,))) not in edges:
            result.add(rest)
    return result


def degree(graph: Hypergraph, v: int) -> int:
    _check_vertex(graph, v)
    return graph.degree(v)


def non_edges(graph: Hypergraph) -> List[Edge]:
    edges = graph.edge_set()
    return [e for e in all_r_subsets(graph.n, graph.r) if e not in edges]


def add_edge(graph: Hypergraph, edge: Iterable[int]) -> Hypergraph:
    return Hypergraph(r=graph.r, n=graph.n, edges=graph.edges + (tuple(edge),))


def remove_edge(graph: Hypergraph, edge: Iterable[int]) -> Hypergraph:
    target = tuple(sorted(edge))
    if target not in graph.edge_set():
        raise ValueError(f"Edge {target} is not in the graph")
    return Hypergraph.trusted(graph.r, graph.n, [e for e in graph.edges if e != target])


def induced_subgraph(graph: Hypergraph, keep: Iterable[int]) -> Hypergraph:
    """Return G[keep] relabelled to 1..|keep| in increasing vertex order."""
    kept = sorted(set(keep))
    for v in kept:
        _check_vertex(graph, v)
    relabel = {v: i + 1 for i, v in enumerate(kept)}
    edges = sorted(tuple(relabel[u] for u in e) for e in graph.edges
                   if all(u in relabel for u in e))
    return Hypergraph.trusted(graph.r, len(kept), edges)


def delete_vertices(graph: Hypergraph, removed: Iterable[int]) -> Hypergraph:
    """Return G \\ removed, the subgraph induced by the remaining vertices."""
    gone = set(removed)
    return induced_subgraph(graph, [v for v in graph.vertices() if v not in gone])


def isolated_vertices(graph: Hypergraph) -> List[int]:
    touched = {u for e in graph.edges for u in e}
    return [v for v in graph.vertices() if v not in touched]


def compact(graph: Hypergraph) -> Hypergraph:
    """Drop isolated vertices, relabelling the rest in order."""
    isolated = isolated_vertices(graph)
    if not isolated:
        return graph
    return delete_vertices(graph, isolated)


def disjoint_union(first: Hypergraph, second: Hypergraph) -> Hypergraph:
    """Return G ⊔ H with H's vertices shifted past G's."""
    _check_same_uniformity(first, second)
    shift = first.n
    shifted = [tuple(u + shift for u in e) for e in second.edges]
    return Hypergraph.trusted(first.r, first.n + second.n, sorted(first.edges + tuple(shifted)))


def extension(graph: Hypergraph) -> Hypergraph:
    """Return H^F: one new edge through every uncovered pair, padded with fresh vertices.

    Each uncovered pair {u, v} receives its own block of r - 2 new vertices
    (labels continue after n, pairs processed lexicographically) and the edge
    {u, v} ∪ block. Every pair of the original vertices is covered afterwards;
    fresh vertices of different blocks never share an edge.
    """
    if graph.r < 3:
        raise ValueError(f"Extension needs r >= 3, got r = {graph.r}")
    missing = uncovered_pairs(graph)
    next_label = graph.n + 1
    new_edges = []
    for u, v in missing:
        block = tuple(range(next_label, next_label + graph.r - 2))
        next_label += graph.r - 2
        new_edges.append((u, v) + block)
    logging.debug("Extension adds %d edges for uncovered pairs", len(new_edges))
    return Hypergraph.trusted(graph.r, next_label - 1, sorted(graph.edges + tuple(new_edges)))


def good_pairs(graph: Hypergraph, anchor: Iterable[int]) -> List[Tuple[int, int]]:
    """Return the good pairs to ``anchor``.

    A pair {a, b} outside A is good when N(a, k) = {b} and N(b, k) = {a} for
    every k in A. An empty A yields no pairs.

    Args:
        graph (Hypergraph): A 3-graph.
        anchor (Iterable[int]): The vertex set A.

    Returns:
        List[Tuple[int, int]]: Good pairs (a < b) in lexicographic order.
    """
    anchor_set = set(anchor)
    for k in anchor_set:
        _check_vertex(graph, k)
    if not anchor_set:
        return []
    outside = [v for v in graph.vertices() if v not in anchor_set]
    pairs = []
    for a, b in combinations(outside, 2):
        if all(pair_link(graph, a, k) == {(b,)} and pair_link(graph, b, k) == {(a,)}
               for k in anchor_set):
            pairs.append((a, b))
    return pairs


def is_good_graph(graph: Hypergraph, anchor: Iterable[int]) -> bool:
    """True iff V(G) \\ A is partitioned exactly by good pairs to A.

    Density is not examined here; callers that need a good graph in the full
    sense combine this with the solver's density test.
    """
    anchor_set = set(anchor)
    outside = [v for v in graph.vertices() if v not in anchor_set]
    if len(outside) % 2 == 1:
        logging.debug("Odd number of vertices outside A; not a good graph")
        return False
    pairs = good_pairs(graph, anchor_set)
    used: Set[int] = set()
    for a, b in pairs:
        if a in used or b in used:
            return False
        used.update((a, b))
    return used == set(outside)


def dominates(graph: Hypergraph, upper: Sequence[int], lower: Sequence[int]) -> bool:
    """True iff the pair ``upper`` ≥ ``lower``: both a₂b₂a₁ and a₂b₂b₁ are edges."""
    a2, b2 = upper
    a1, b1 = lower
    edges = graph.edge_set()
    return tuple(sorted((a2, b2, a1))) in edges and tuple(sorted((a2, b2, b1))) in edges


def good_pair_order_is_total(graph: Hypergraph, anchor: Iterable[int]) -> bool:
    """True iff every two good pairs to A are comparable under `dominates`."""
    pairs = good_pairs(graph, anchor)
    return all(dominates(graph, p, q) or dominates(graph, q, p)
               for p, q in combinations(pairs, 2))
