import logging
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel

from ..models import Hypergraph, WeightVector
from .config import (ASCENT_CHECK_EVERY, ASCENT_STAGE_ITERS, MONOTONE_SLACK, POLISH_ITERS,
                     RATIONAL_DENOMINATOR_CAP, STATIONARITY_TOL, SUPPORT_EPS,
                     SYMMETRIZE_MAX_SWEEPS, WEIGHT_SUM_TOL)
from .hypergraph_utils import link_difference

WeightsLike = Union[WeightVector, Sequence[float], np.ndarray]


class AscentResult(BaseModel):
    weights: WeightVector
    value: float
    iterations: int
    converged: bool
    residual: float


def edge_array(graph: Hypergraph) -> np.ndarray:
    """Edges as a zero-based (m, r) integer array."""
    if not graph.edges:
        return np.zeros((0, graph.r), dtype=np.int64)
    return np.asarray(graph.edges, dtype=np.int64) - 1


def as_weight_array(graph: Hypergraph, x: WeightsLike) -> np.ndarray:
    values = x.weights if isinstance(x, WeightVector) else x
    array = np.asarray(values, dtype=float)
    if array.shape != (graph.n,):
        raise ValueError(f"Weight vector has length {array.shape}, expected {graph.n}")
    return array


def to_weight_vector(x: np.ndarray) -> WeightVector:
    clipped = np.clip(x, 0.0, None)
    total = clipped.sum()
    if total > 0:
        clipped = clipped / total
    return WeightVector(weights=tuple(float(w) for w in np.clip(clipped, 0.0, 1.0)))


def _poly(edges: np.ndarray, x: np.ndarray) -> float:
    if edges.shape[0] == 0:
        return 0.0
    return float(np.prod(x[edges], axis=1).sum())


def _grad(edges: np.ndarray, x: np.ndarray, n: int) -> np.ndarray:
    grad = np.zeros(n)
    if edges.shape[0] == 0:
        return grad
    factors = x[edges]
    for j in range(edges.shape[1]):
        others = np.prod(np.delete(factors, j, axis=1), axis=1)
        grad += np.bincount(edges[:, j], weights=others, minlength=n)
    return grad


def _hess(edges: np.ndarray, x: np.ndarray, n: int) -> np.ndarray:
    hess = np.zeros((n, n))
    if edges.shape[0] == 0 or edges.shape[1] < 2:
        return hess
    factors = x[edges]
    for j, k in combinations(range(edges.shape[1]), 2):
        others = np.prod(np.delete(factors, [j, k], axis=1), axis=1)
        np.add.at(hess, (edges[:, j], edges[:, k]), others)
        np.add.at(hess, (edges[:, k], edges[:, j]), others)
    return hess


def _residual(r: int, value: float, grad: np.ndarray, x: np.ndarray) -> float:
    target = r * value
    inside = x > 0
    on_support = float(np.max(np.abs(grad[inside] - target))) if inside.any() else 0.0
    off_support = float(np.max(np.clip(grad[~inside] - target, 0.0, None))) \
        if (~inside).any() else 0.0
    return on_support + off_support


def raw_polynomial(graph: Hypergraph, y: Sequence[float]) -> float:
    """Edge polynomial at an arbitrary non-negative vector (no simplex constraint)."""
    return _poly(edge_array(graph), as_weight_array(graph, y))


def evaluate(graph: Hypergraph, x: WeightsLike) -> float:
    """Return λ(G, x) = Σ_e Π_{i∈e} x_i.

    Args:
        graph (Hypergraph): The r-graph.
        x (WeightsLike): Weights indexed by vertex - 1.

    Returns:
        float: The polynomial value, summed over sorted edges with numpy's
        pairwise accumulation.
    """
    return _poly(edge_array(graph), as_weight_array(graph, x))


def gradient(graph: Hypergraph, x: WeightsLike) -> np.ndarray:
    """Partial derivatives; component i is the link polynomial of vertex i + 1 at x."""
    return _grad(edge_array(graph), as_weight_array(graph, x), graph.n)


def hessian(graph: Hypergraph, x: WeightsLike) -> np.ndarray:
    return _hess(edge_array(graph), as_weight_array(graph, x), graph.n)


def kkt_residual(graph: Hypergraph, x: WeightsLike) -> float:
    """Stationarity residual of a simplex point.

    The maximum deviation of ∂λ/∂x_i from r·λ over the support, plus the
    largest excess of ∂λ/∂x_i over r·λ outside the support.
    """
    array = as_weight_array(graph, x)
    edges = edge_array(graph)
    return _residual(graph.r, _poly(edges, array), _grad(edges, array, graph.n), array)


def simplex_projection(c: np.ndarray) -> np.ndarray:
    """Euclidean projection onto {x >= 0, Σx = 1}."""
    n = len(c)
    a = -np.sort(-c)
    thresholds = (np.cumsum(a) - 1) / np.arange(1, n + 1)
    for k in range(n - 1, -1, -1):
        if a[k] > thresholds[k]:
            return np.maximum(c - thresholds[k], 0)
    return np.full(n, 1.0 / n)


def ascend_array(edges: np.ndarray, r: int, n: int, x0: np.ndarray, tol: float,
                 max_iters: int, trace: Optional[List[float]] = None) -> Tuple[np.ndarray, int, bool]:
    """Growth-transform ascent x_i <- x_i ∂_iλ / (r λ) on raw arrays.

    Stops at stationarity residual <= tol, at max_iters, or when the value has
    stalled over a check window. Returns (x, iterations, converged).
    """
    x = x0.copy()
    value = _poly(edges, x)
    if trace is not None:
        trace.append(value)
    last_checked = value
    for iteration in range(1, max_iters + 1):
        grad = _grad(edges, x, n)
        if value <= 0.0:
            if not grad.any():
                grad = np.full(n, 1.0 / n)
            candidate = simplex_projection(x + grad)
        else:
            candidate = x * grad / (r * value)
            candidate /= candidate.sum()
        candidate_value = _poly(edges, candidate)
        if candidate_value < value:
            # rounding at a fixed point; the growth transform itself never decreases λ
            return x, iteration, _residual(r, value, _grad(edges, x, n), x) <= tol
        x, value = candidate, candidate_value
        if trace is not None:
            trace.append(value)
        if iteration % ASCENT_CHECK_EVERY == 0:
            residual = _residual(r, value, _grad(edges, x, n), x)
            if residual <= tol:
                return x, iteration, True
            if value - last_checked <= MONOTONE_SLACK * max(value, 1.0):
                return x, iteration, False
            last_checked = value
    return x, max_iters, _residual(r, value, _grad(edges, x, n), x) <= tol


def local_ascend(graph: Hypergraph, x0: WeightsLike, tol: float = STATIONARITY_TOL,
                 max_iters: int = 20_000, trace: Optional[List[float]] = None) -> AscentResult:
    """Monotone ascent from a feasible start.

    Args:
        graph (Hypergraph): The r-graph.
        x0 (WeightsLike): Feasible starting weights.
        tol (float): Stationarity residual at which to stop.
        max_iters (int): Iteration cap.
        trace (Optional[List[float]]): When given, receives λ at every iterate.

    Returns:
        AscentResult: Best iterate, flagged when not converged.
    """
    start = as_weight_array(graph, x0)
    if graph.n == 0:
        return AscentResult(weights=WeightVector(weights=()), value=0.0, iterations=0,
                            converged=True, residual=0.0)
    if abs(start.sum() - 1.0) > WEIGHT_SUM_TOL * graph.n or (start < 0).any():
        raise ValueError("Starting point is not on the simplex")
    edges = edge_array(graph)
    x, iterations, converged = ascend_array(edges, graph.r, graph.n, start, tol, max_iters, trace)
    if not converged:
        logging.debug("Ascent stopped after %d iterations without reaching tol %g",
                      iterations, tol)
    value = _poly(edges, x)
    return AscentResult(weights=to_weight_vector(x), value=value, iterations=iterations,
                        converged=converged,
                        residual=_residual(graph.r, value, _grad(edges, x, graph.n), x))


def polish_array(edges: np.ndarray, r: int, n: int, x: np.ndarray) -> np.ndarray:
    """Trim vanishing weights, then run Newton on the support's KKT system.

    The polished point is only returned when it does not lower λ and lowers
    the stationarity residual; otherwise ``x`` comes back unchanged.
    """
    value = _poly(edges, x)
    grad = _grad(edges, x, n)
    before = _residual(r, value, grad, x)
    trimmed = np.where((x < SUPPORT_EPS) & (grad < r * value), 0.0, x)
    if trimmed.sum() <= 0:
        return x
    current = trimmed / trimmed.sum()
    support = np.flatnonzero(current > 0)
    k = len(support)
    for _ in range(POLISH_ITERS):
        value_c = _poly(edges, current)
        grad_c = _grad(edges, current, n)
        mu = r * value_c
        system = np.concatenate([grad_c[support] - mu, [current[support].sum() - 1.0]])
        if np.max(np.abs(system)) < 1e-15:
            break
        jacobian = np.zeros((k + 1, k + 1))
        jacobian[:k, :k] = _hess(edges, current, n)[np.ix_(support, support)]
        jacobian[:k, k] = -1.0
        jacobian[k, :k] = 1.0
        step = np.linalg.lstsq(jacobian, -system, rcond=None)[0][:k]
        alpha, accepted = 1.0, False
        while alpha > 1e-6:
            trial = current.copy()
            trial[support] += alpha * step
            if (trial[support] > 0).all():
                trial /= trial.sum()
                trial_grad = _grad(edges, trial, n)
                trial_value = _poly(edges, trial)
                trial_system = np.concatenate([trial_grad[support] - r * trial_value, [0.0]])
                if np.max(np.abs(trial_system)) < np.max(np.abs(system)):
                    current, accepted = trial, True
                    break
            alpha /= 2
        if not accepted:
            break
    after_value = _poly(edges, current)
    after = _residual(r, after_value, _grad(edges, current, n), current)
    if after_value >= value - MONOTONE_SLACK and after <= before:
        return current
    return x


def staged_ascend_array(edges: np.ndarray, r: int, n: int, x0: np.ndarray, tol: float,
                        max_iters: int, stage: int = ASCENT_STAGE_ITERS
                        ) -> Tuple[np.ndarray, int, bool]:
    """Growth-transform ascent in short stages, each handed to the Newton polish.

    Newton converges quadratically once the support is identified, so a start
    usually finishes after one or two stages instead of running the ascent
    down to ``tol``. Stops when the polished point is stationary, when a stage
    stalls, or at ``max_iters`` ascent iterations in total.

    Returns:
        (x, iterations, converged)
    """
    x, used = x0, 0
    while used < max_iters:
        budget = min(stage, max_iters - used)
        x, iterations, converged = ascend_array(edges, r, n, x, tol, budget)
        used += iterations
        x = polish_array(edges, r, n, x)
        if converged or _residual(r, _poly(edges, x), _grad(edges, x, n), x) <= tol:
            return x, used, True
        if iterations < budget:
            break
    return x, used, False


def symmetrize(graph: Hypergraph, x: WeightsLike) -> WeightVector:
    """Average the weights of every pair i, j with L(i\\j) = L(j\\i) = ∅.

    Averaging such a pair never lowers λ. Sweeps repeat until every eligible
    pair carries equal weights (within 1e-12).
    """
    array = as_weight_array(graph, x).copy()
    eligible = [(i, j) for i, j in combinations(graph.vertices(), 2)
                if not link_difference(graph, i, j) and not link_difference(graph, j, i)]
    for _ in range(SYMMETRIZE_MAX_SWEEPS):
        changed = False
        for i, j in eligible:
            if abs(array[i - 1] - array[j - 1]) > WEIGHT_SUM_TOL:
                mean = (array[i - 1] + array[j - 1]) / 2
                array[i - 1] = array[j - 1] = mean
                changed = True
        if not changed:
            break
    else:
        logging.warning("Symmetrization did not settle after %d sweeps", SYMMETRIZE_MAX_SWEEPS)
    return to_weight_vector(array)


def exact_eval(graph: Hypergraph, x: Sequence[Fraction]) -> Fraction:
    """Exact λ(G, x) for rational weights summing to exactly 1."""
    weights = [Fraction(w) for w in x]
    if len(weights) != graph.n:
        raise ValueError(f"Weight vector has length {len(weights)}, expected {graph.n}")
    if any(w < 0 for w in weights):
        raise ValueError("Rational weights must be non-negative")
    if graph.n and sum(weights) != 1:
        raise ValueError(f"Rational weights sum to {sum(weights)}, not 1")
    total = Fraction(0)
    for e in graph.edges:
        term = Fraction(1)
        for v in e:
            term *= weights[v - 1]
        total += term
    return total


def rationalize(x: Sequence[float],
                max_denominator: int = RATIONAL_DENOMINATOR_CAP) -> Optional[List[Fraction]]:
    """Continued-fraction rounding of each weight, renormalised onto the simplex."""
    rounded = [Fraction(float(w)).limit_denominator(max_denominator) for w in x]
    total = sum(rounded)
    if total <= 0:
        return None
    return [w / total for w in rounded]


def exact_gradient(graph: Hypergraph, x: Sequence[Fraction]) -> List[Fraction]:
    weights = [Fraction(w) for w in x]
    grad = [Fraction(0)] * graph.n
    for e in graph.edges:
        for v in e:
            term = Fraction(1)
            for u in e:
                if u != v:
                    term *= weights[u - 1]
            grad[v - 1] += term
    return grad


def is_exact_kkt(graph: Hypergraph, x: Sequence[Fraction]) -> bool:
    """True iff the rational point satisfies the KKT conditions exactly.

    ∂λ/∂x_i = r·λ on the support and ∂λ/∂x_i <= r·λ off it.
    """
    target = graph.r * exact_eval(graph, x)
    grad = exact_gradient(graph, x)
    return all(g == target if w > 0 else g <= target for w, g in zip(x, grad))
