from itertools import combinations

import numpy as np
import pytest

from hyperlambda.models import Hypergraph
from hyperlambda.utils.canonical_utils import (automorphism_orbits, canonical_form,
                                               canonical_labeling, is_canonical, isomorphic,
                                               relabel)
from hyperlambda.utils.constructions import complete, f5, fano, o_graph, s2t, star


def _random_graph(rng, n, r=3, p=0.4):
    edges = [e for e in combinations(range(1, n + 1), r) if rng.random() < p]
    return Hypergraph(r=r, n=n, edges=edges)


def _permute(graph, rng):
    perm = [int(v) + 1 for v in rng.permutation(graph.n)]
    return relabel(graph, {v: perm[v - 1] for v in graph.vertices()})


def test_canonical_form_is_idempotent_and_invariant():
    rng = np.random.default_rng(7)
    for _ in range(100):
        graph = _random_graph(rng, int(rng.integers(1, 8)))
        form = canonical_form(graph)
        assert canonical_form(form) == form
        assert is_canonical(form)
        assert canonical_form(_permute(graph, rng)) == form


def test_isomorphic_detects_relabelled_copies():
    relabelled = relabel(f5(), {1: 5, 2: 4, 3: 3, 4: 2, 5: 1})
    assert isomorphic(f5(), relabelled)
    assert isomorphic(f5(), Hypergraph(r=3, n=5, edges=[(1, 2, 3), (1, 4, 5), (2, 4, 5)]))
    assert not isomorphic(f5(), Hypergraph(r=3, n=5, edges=[(1, 2, 3), (1, 2, 4), (1, 2, 5)]))
    assert not isomorphic(f5(), complete(5, 3))


def test_o2_is_k4():
    assert isomorphic(o_graph(2), complete(4, 3))


def test_canonical_labeling_is_a_bijection():
    labels = canonical_labeling(fano())
    assert sorted(labels.values()) == list(range(1, 8))
    assert relabel(fano(), labels) == canonical_form(fano())


@pytest.mark.parametrize("graph, orbits", [
    (complete(4, 3), [[1, 2, 3, 4]]),
    (f5(), [[1, 2], [3, 4], [5]]),
    (star(5), [[1], [2, 3, 4, 5]]),
    (s2t(3), [[1, 2], [3, 4, 5]]),
    (fano(), [[1, 2, 3, 4, 5, 6, 7]]),
    (Hypergraph(r=3, n=0), []),
])
def test_automorphism_orbits(graph, orbits):
    assert automorphism_orbits(graph) == orbits


def test_relabel_rejects_non_bijections():
    with pytest.raises(ValueError, match="bijection"):
        relabel(f5(), {1: 1, 2: 1, 3: 3, 4: 4, 5: 5})
