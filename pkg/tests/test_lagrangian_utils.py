from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from hyperlambda.models import Hypergraph, WeightVector
from hyperlambda.utils.constructions import complete, complete_minus, f5, s2t, star
from hyperlambda.utils.lagrangian_utils import (edge_array, evaluate, exact_eval, gradient,
                                                hessian, kkt_residual, local_ascend,
                                                raw_polynomial, rationalize, simplex_projection,
                                                staged_ascend_array, symmetrize)


def _random_graph(rng, n, r=3, p=0.5):
    return Hypergraph(r=r, n=n, edges=[e for e in combinations(range(1, n + 1), r)
                                       if rng.random() < p])


def test_evaluate_complete_graph_at_uniform():
    assert evaluate(complete(4, 3), [0.25] * 4) == pytest.approx(1 / 16)
    assert evaluate(complete(5, 3), WeightVector(weights=(0.2,) * 5)) == pytest.approx(0.08)


def test_evaluate_checks_length():
    with pytest.raises(ValueError, match="expected 5"):
        evaluate(f5(), [0.5, 0.5])


def test_gradient_is_link_polynomial():
    x = np.array([0.4, 0.3, 0.2, 0.1])
    grad = gradient(complete_minus(4, 3), x)
    assert grad[0] == pytest.approx(0.3 * 0.2 + 0.3 * 0.1 + 0.2 * 0.1)
    assert grad[3] == pytest.approx(0.4 * 0.3 + 0.4 * 0.2)


def test_gradient_matches_finite_differences():
    rng = np.random.default_rng(5)
    h = 1e-6
    for _ in range(100):
        n = int(rng.integers(3, 8))
        graph = _random_graph(rng, n, int(rng.integers(2, 4)))
        x = rng.dirichlet(np.ones(n))
        grad = gradient(graph, x)
        for i in range(n):
            up, down = x.copy(), x.copy()
            up[i] += h
            down[i] -= h
            numeric = (raw_polynomial(graph, up) - raw_polynomial(graph, down)) / (2 * h)
            assert numeric == pytest.approx(grad[i], abs=1e-6)


def test_hessian_of_single_edge():
    hess = hessian(complete(3, 3), [0.5, 0.3, 0.2])
    assert hess[0, 1] == pytest.approx(0.2)
    assert hess[1, 0] == pytest.approx(0.2)
    assert hess[0, 0] == 0


def test_raw_polynomial_is_homogeneous():
    rng = np.random.default_rng(9)
    graph = _random_graph(rng, 6)
    y = rng.random(6)
    assert raw_polynomial(graph, 2.5 * y) == pytest.approx(2.5 ** 3 * raw_polynomial(graph, y))


def test_kkt_residual_vanishes_at_uniform_complete():
    assert kkt_residual(complete(5, 3), [0.2] * 5) < 1e-12
    assert kkt_residual(complete(5, 3), [0.5, 0.5, 0, 0, 0]) > 0.1


@pytest.mark.parametrize("point, projected", [
    ([0.5, 0.5], [0.5, 0.5]),
    ([2.0, 0.0], [1.0, 0.0]),
    ([0.0, 0.0, 0.0], [1 / 3, 1 / 3, 1 / 3]),
    ([1.0, 1.0, -5.0], [0.5, 0.5, 0.0]),
])
def test_simplex_projection(point, projected):
    assert simplex_projection(np.array(point)) == pytest.approx(projected)


def test_local_ascent_is_monotone_and_reaches_k5():
    trace = []
    result = local_ascend(complete(5, 3), [0.6, 0.1, 0.1, 0.1, 0.1], trace=trace)
    assert all(b >= a - 1e-15 for a, b in zip(trace, trace[1:]))
    assert result.value == pytest.approx(0.08, abs=1e-9)
    assert result.converged


def test_local_ascent_rejects_points_off_the_simplex():
    with pytest.raises(ValueError, match="simplex"):
        local_ascend(complete(4, 3), [0.5, 0.5, 0.5, 0.5])


def test_symmetrize_averages_twins():
    graph = s2t(3)
    x = [0.3, 0.3, 0.2, 0.1, 0.1]
    symmetric = symmetrize(graph, x).weights
    assert symmetric[2] == pytest.approx(symmetric[3]) == pytest.approx(symmetric[4])
    assert symmetric[2] == pytest.approx(0.4 / 3)
    assert evaluate(graph, symmetric) >= evaluate(graph, x) - 1e-12


def test_symmetrize_never_decreases():
    rng = np.random.default_rng(2)
    for _ in range(200):
        n = int(rng.integers(3, 8))
        graph = _random_graph(rng, n)
        x = rng.dirichlet(np.ones(n))
        assert evaluate(graph, symmetrize(graph, x)) >= evaluate(graph, x) - 1e-12


def test_exact_eval():
    assert exact_eval(complete(5, 3), [Fraction(1, 5)] * 5) == Fraction(2, 25)
    assert exact_eval(star(4), [Fraction(1, 3)] + [Fraction(2, 9)] * 3) == Fraction(4, 81)
    with pytest.raises(ValueError, match="not 1"):
        exact_eval(complete(3, 3), [Fraction(1, 3)] * 2 + [Fraction(1, 2)])
    with pytest.raises(ValueError, match="non-negative"):
        exact_eval(complete(3, 3), [Fraction(1), Fraction(1), Fraction(-1)])


def test_rationalize():
    assert rationalize([0.2] * 5) == [Fraction(1, 5)] * 5
    weights = rationalize([1 / 3, 2 / 9, 2 / 9, 2 / 9])
    assert weights == [Fraction(1, 3), Fraction(2, 9), Fraction(2, 9), Fraction(2, 9)]
    assert sum(weights) == 1
    assert rationalize([0.0, 0.0]) is None


def test_staged_ascent_finishes_with_newton():
    graph = complete_minus(4, 3)
    edges = edge_array(graph)
    x0 = np.random.default_rng(5).dirichlet(np.ones(4))
    x, iterations, converged = staged_ascend_array(edges, 3, 4, x0, 1e-10, 20_000)
    assert converged
    assert iterations < 20_000
    assert evaluate(graph, x) == pytest.approx(4 / 81, abs=1e-12)
    assert kkt_residual(graph, x) <= 1e-10


def test_staged_ascent_respects_iteration_cap():
    graph = s2t(3)
    x0 = np.full(graph.n, 1.0 / graph.n)
    x, iterations, _ = staged_ascend_array(edge_array(graph), 3, graph.n, x0, 1e-8, 30)
    assert iterations <= 30
    assert evaluate(graph, x) >= evaluate(graph, x0) - 1e-12
