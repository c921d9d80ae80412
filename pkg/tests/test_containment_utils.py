from itertools import combinations

import numpy as np
import pytest

from hyperlambda.models import ForbiddenFamily, Hypergraph
from hyperlambda.utils.constructions import (as_family, complete, complete_minus, f5, fano,
                                             linear_cycle, single_edge)
from hyperlambda.utils.containment_utils import contains, has_copy, is_free, is_free_edges


def test_f5_in_k5():
    embedding = contains(complete(5, 3), f5())
    assert embedding is not None
    assert embedding.mapping == (1, 2, 3, 4, 5)


def test_embedding_maps_edges_to_edges():
    host = Hypergraph(r=3, n=6, edges=[(2, 5, 6), (3, 5, 6), (1, 2, 3), (1, 4, 6)])
    embedding = contains(host, f5())
    assert embedding is not None
    assert all(embedding.image(e) in host.edge_set() for e in f5().edges)


@pytest.mark.parametrize("host, pattern, expected", [
    (complete(4, 3), f5(), False),
    (fano(), f5(), False),
    (complete(5, 3), linear_cycle(3), False),
    (complete(6, 3), linear_cycle(3), True),
    (complete(4, 3), complete_minus(4, 3), True),
    (Hypergraph(r=3, n=3), single_edge(3), False),
])
def test_containment_table(host, pattern, expected):
    assert (contains(host, pattern) is not None) is expected
    assert has_copy(host.n, host.edges, pattern) is expected


def test_isolated_pattern_vertices_need_room():
    pattern = Hypergraph(r=3, n=4, edges=[(1, 2, 3)])
    assert contains(single_edge(3), pattern) is None
    assert contains(Hypergraph(r=3, n=4, edges=[(2, 3, 4)]), pattern).mapping == (2, 3, 4, 1)


def test_contains_is_reflexive_and_transitive():
    rng = np.random.default_rng(3)
    for _ in range(30):
        n = int(rng.integers(3, 8))
        edges = [e for e in combinations(range(1, n + 1), 3) if rng.random() < 0.5]
        big = Hypergraph(r=3, n=n, edges=edges)
        middle = Hypergraph(r=3, n=n, edges=[e for e in edges if rng.random() < 0.7])
        small = Hypergraph(r=3, n=n, edges=[e for e in middle.edges if rng.random() < 0.7])
        assert contains(big, big) is not None
        assert contains(big, middle) is not None
        assert contains(middle, small) is not None
        assert contains(big, small) is not None


def test_uniformity_mismatch():
    with pytest.raises(ValueError, match="Uniformity mismatch"):
        contains(complete(4, 3), complete(3, 2))
    with pytest.raises(ValueError, match="Uniformity mismatch"):
        is_free(complete(4, 2), as_family("F5"))


def test_free_of_family():
    family = ForbiddenFamily(members=[f5(), linear_cycle(3)], name="F5+C3_3")
    assert is_free(complete(4, 3), family)
    assert not is_free(complete(5, 3), family)
    assert is_free(complete(5, 3), as_family("C3_3"))
    assert not is_free_edges(6, complete(6, 3).edges, as_family("C3_3"))
