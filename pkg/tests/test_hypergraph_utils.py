import pytest
from pydantic import ValidationError

from hyperlambda.models import Embedding, ForbiddenFamily, Hypergraph
from hyperlambda.utils.constructions import (complete, complete_minus, f5, fano,
                                             good_graph_instance, linear_path, s2t, star)
from hyperlambda.utils.hypergraph_utils import (add_edge, compact, covers_pairs, degree,
                                                delete_vertices, disjoint_union, dominates,
                                                extension, good_pair_order_is_total, good_pairs,
                                                induced_subgraph, is_good_graph, link,
                                                link_difference, non_edges, pair_link,
                                                remove_edge, uncovered_pairs)


def test_edges_are_normalized():
    graph = Hypergraph(r=3, n=4, edges=[(4, 2, 1), (3, 2, 1)])
    assert graph.edges == ((1, 2, 3), (1, 2, 4))


@pytest.mark.parametrize("edges, message", [
    ([(1, 2)], "expected 3"),
    ([(1, 1, 2)], "repeats a vertex"),
    ([(1, 2, 5)], "outside 1..4"),
    ([(1, 2, 3), (3, 2, 1)], "Duplicate edge"),
])
def test_invalid_edges_are_rejected(edges, message):
    with pytest.raises(ValidationError, match=message):
        Hypergraph(r=3, n=4, edges=edges)


def test_embedding_must_be_injective():
    with pytest.raises(ValidationError, match="not injective"):
        Embedding(mapping=(1, 1, 2))


def test_family_rejects_mixed_uniformity():
    with pytest.raises(ValidationError, match="same uniformity"):
        ForbiddenFamily(members=[complete(3, 3), complete(3, 2)])


def test_link_of_apex_in_star():
    graph = star(4)
    assert link(graph, 1).edges == ((2, 3), (2, 4), (3, 4))
    assert link(graph, 1).r == 2
    assert link(graph, 2).edges == ((1, 3), (1, 4))


def test_pair_link_and_degree():
    graph = f5()
    assert pair_link(graph, 1, 2) == {(3,), (4,)}
    assert pair_link(graph, 3, 4) == {(5,)}
    assert degree(graph, 1) == 2
    with pytest.raises(ValueError, match="outside"):
        degree(graph, 6)


def test_covers_pairs():
    assert covers_pairs(complete(5, 3))
    assert covers_pairs(fano())
    assert not covers_pairs(f5())
    assert uncovered_pairs(f5()) == [(1, 5), (2, 5)]


def test_link_difference():
    assert link_difference(f5(), 5, 1) == {(3, 4)}
    assert link_difference(f5(), 1, 2) == set()
    assert link_difference(s2t(2), 3, 4) == set()


def test_edge_edits_and_non_edges():
    graph = complete_minus(4, 3)
    assert non_edges(graph) == [(2, 3, 4)]
    assert add_edge(graph, (4, 3, 2)) == complete(4, 3)
    assert remove_edge(complete(4, 3), (2, 3, 4)) == graph
    with pytest.raises(ValueError, match="not in the graph"):
        remove_edge(graph, (2, 3, 4))


def test_induced_subgraph_relabels():
    graph = f5()
    sub = induced_subgraph(graph, [1, 3, 4, 5])
    assert sub.n == 4
    assert sub.edges == ((2, 3, 4),)
    assert delete_vertices(graph, [5]) == Hypergraph(r=3, n=4, edges=[(1, 2, 3), (1, 2, 4)])


def test_compact_drops_isolated_vertices():
    graph = Hypergraph(r=3, n=6, edges=[(2, 4, 6)])
    assert compact(graph) == Hypergraph(r=3, n=3, edges=[(1, 2, 3)])


def test_disjoint_union_shifts_labels():
    union = disjoint_union(complete(3, 3), complete(3, 3))
    assert union.n == 6
    assert union.edges == ((1, 2, 3), (4, 5, 6))
    with pytest.raises(ValueError, match="Uniformity mismatch"):
        disjoint_union(complete(3, 3), complete(3, 2))


def test_extension_covers_pairs():
    graph = linear_path(2)
    missing = len(uncovered_pairs(graph))
    extended = extension(graph)
    assert covers_pairs(extended, graph.vertices())
    assert not covers_pairs(extended)
    assert extended.edge_count == graph.edge_count + missing
    assert extended.n == graph.n + missing
    with pytest.raises(ValueError, match="r >= 3"):
        extension(complete(3, 2))


def test_extension_of_four_uniform_graph_uses_fresh_blocks():
    graph = Hypergraph(r=4, n=5, edges=[(1, 2, 3, 4)])
    extended = extension(graph)
    assert extended.n == 5 + 2 * 4
    assert covers_pairs(extended, range(1, 6))


def test_good_pairs_and_order():
    base = complete_minus(4, 3)
    anchor = [1, 2, 3, 4]
    graph = good_graph_instance(base, 3, with_o_edges=True)
    assert good_pairs(graph, anchor) == [(5, 6), (7, 8), (9, 10)]
    assert is_good_graph(graph, anchor)
    assert good_pair_order_is_total(graph, anchor)
    assert dominates(graph, (5, 6), (7, 8))


def test_good_pairs_without_o_edges_are_incomparable():
    anchor = [1, 2, 3, 4]
    graph = good_graph_instance(complete_minus(4, 3), 2)
    assert is_good_graph(graph, anchor)
    assert not good_pair_order_is_total(graph, anchor)


def test_odd_outside_is_not_good():
    graph = good_graph_instance(complete_minus(4, 3), 1)
    padded = Hypergraph(r=3, n=graph.n + 1, edges=graph.edges)
    assert not is_good_graph(padded, [1, 2, 3, 4])


def test_empty_anchor_has_no_good_pairs():
    assert good_pairs(complete(4, 3), []) == []


def test_extension_of_matching_matches_counts():
    matching = Hypergraph(r=3, n=6, edges=[(1, 2, 3), (4, 5, 6)])
    extended = extension(matching)
    assert extended.n == 15
    assert extended.edge_count == 11


def test_extension_of_pair_covering_graph_is_identity():
    assert extension(complete_minus(4, 3)) == complete_minus(4, 3)
    assert extension(complete(3, 3)) == complete(3, 3)


def test_link_size_equals_degree():
    graph = fano()
    for v in graph.vertices():
        assert link(graph, v).edge_count == degree(graph, v) == 3


def test_isolated_vertex_breaks_pair_cover():
    graph = Hypergraph(r=3, n=4, edges=[(1, 2, 3)])
    assert not covers_pairs(graph)
    assert covers_pairs(graph, [1, 2, 3])
