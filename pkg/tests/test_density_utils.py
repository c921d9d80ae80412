import pytest

from hyperlambda.models import Hypergraph, SolverOptions
from hyperlambda.utils.constructions import complete, complete_minus, fano, s2t, single_edge
from hyperlambda.utils.density_utils import dense_reduction, dense_witness, is_dense

OPTIONS = SolverOptions(starts=12)
PATH = Hypergraph(r=2, n=3, edges=[(1, 2), (2, 3)])


@pytest.mark.parametrize("graph", [
    complete(4, 3),
    complete(5, 3),
    single_edge(3),
    complete_minus(4, 3),
    complete(5, 2),
])
def test_dense_graphs(graph):
    assert is_dense(graph, OPTIONS)
    assert dense_witness(graph, OPTIONS) is None


@pytest.mark.parametrize("graph", [
    s2t(3),
    fano(),
    PATH,
    Hypergraph(r=3, n=4, edges=[(1, 2, 3)]),
])
def test_not_dense_graphs(graph):
    assert not is_dense(graph, OPTIONS)


def test_edgeless_graph_is_not_dense():
    assert not is_dense(Hypergraph(r=3, n=3), OPTIONS)
    assert not is_dense(Hypergraph(r=3, n=0), OPTIONS)


def test_witness_is_proper_subgraph():
    witness = dense_witness(s2t(3), OPTIONS)
    assert witness is not None
    assert witness.edge_count == 2
    assert dense_witness(Hypergraph(r=3, n=5, edges=[(1, 2, 3)]), OPTIONS) == single_edge(3)


def test_dense_reduction():
    assert dense_reduction(s2t(3), OPTIONS) == single_edge(3)
    assert dense_reduction(PATH, OPTIONS) == Hypergraph(r=2, n=2, edges=[(1, 2)])
    assert dense_reduction(complete(4, 3), OPTIONS) == complete(4, 3)


def test_dense_reduction_of_edgeless_graph():
    assert dense_reduction(Hypergraph(r=3, n=4), OPTIONS) == Hypergraph(r=3, n=0)
