import logging
from abc import ABC
from fractions import Fraction
from typing import List, Optional

import numpy as np

from ...models import (Hypergraph, LagrangianCertificate, SolverOptions,
                       WeightVector)
from ..config import VALUE_TOL
from ..lagrangian_utils import (_grad, _poly, _residual, edge_array, exact_eval,
                                is_exact_kkt, polish_array, rationalize)
from ..solver_engine import SolverEngine


class BaseSolverEngine(SolverEngine, ABC):
    """Base class for solver backends with the shared certification step."""

    def applies(self, graph: Hypergraph, options: SolverOptions) -> bool:
        return bool(graph.edges)

    def certify(self, graph: Hypergraph, x: np.ndarray, options: SolverOptions,
                starts_used: int = 0, polish: bool = True,
                exact: Optional[Fraction] = None,
                exact_weights: Optional[List[Fraction]] = None) -> LagrangianCertificate:
        """Turn a simplex point into a certificate.

        The point is polished on its support, then rounded to small-denominator
        rationals. The rounded point becomes the exact certificate only when it
        satisfies the KKT conditions exactly, and replaces the float point when
        it is at least as good. ``exact`` skips the rounding when the value is
        already known.

        Args:
            graph: The r-graph
            x: Weights indexed by vertex - 1
            options: Solver options of the current call
            starts_used: Number of starting points consumed
            polish: Run the Newton polish first
            exact: Known exact value at ``x``
            exact_weights: Rational form of ``x`` when ``exact`` is given

        Returns:
            The certificate
        """
        edges = edge_array(graph)
        point = np.clip(np.asarray(x, dtype=float), 0.0, None)
        point = point / point.sum()
        if polish:
            point = polish_array(edges, graph.r, graph.n, point)
        value = _poly(edges, point)
        exact_value: Optional[Fraction] = exact
        if exact is None:
            rounded = rationalize(point)
            if rounded is not None:
                candidate = exact_eval(graph, rounded)
                if candidate >= value - VALUE_TOL and is_exact_kkt(graph, rounded):
                    exact_value, exact_weights = candidate, rounded
                    rounded_point = np.array([float(w) for w in rounded])
                    rounded_value = _poly(edges, rounded_point)
                    if rounded_value >= value:
                        point, value = rounded_point, rounded_value
        residual = _residual(graph.r, value, _grad(edges, point, graph.n), point)
        weights = WeightVector(weights=tuple(float(w) for w in point / point.sum()))
        if exact_value is not None and abs(float(exact_value) - value) > VALUE_TOL:
            logging.warning("Dropping exact value %s, float value %.15g disagrees",
                            exact_value, value)
            exact_value, exact_weights = None, None
        return LagrangianCertificate(
            value=value, weights=weights, support=weights.support(),
            kkt_residual=residual, method=self.method, starts_used=starts_used,
            seed=options.seed, converged=residual <= options.tol,
            exact=exact_value, exact_weights=exact_weights)

