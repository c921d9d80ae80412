import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Sequence

from ..models import (Hypergraph, LagrangianCertificate, SolverMethod, SolverOptions,
                      WeightVector)
from .config import CONFIRM_STARTS_PER_VERTEX


class SolverEngine(ABC):
    """Abstract base class for Lagrangian solver backends."""

    method: SolverMethod
    # a certificate from an exact oracle is optimal, so no other backend runs
    exact_oracle: bool = False

    @abstractmethod
    def applies(self, graph: Hypergraph, options: SolverOptions) -> bool:
        """Whether this backend can produce a certificate for ``graph``.

        Args:
            graph: The r-graph to solve
            options: Solver options of the current call

        Returns:
            True when `solve` should be called
        """

    @abstractmethod
    def solve(self, graph: Hypergraph, options: SolverOptions) -> List[LagrangianCertificate]:
        """Produce candidate certificates for ``graph``.

        Args:
            graph: A graph with at least one edge
            options: Solver options of the current call

        Returns:
            Certificates, best first is not required
        """


def _tie_key(certificate: LagrangianCertificate):
    return tuple(round(w, 12) for w in sorted(certificate.weights.weights, reverse=True))


def best_certificate(candidates: Sequence[LagrangianCertificate],
                     value_tol: float = 1e-12) -> LagrangianCertificate:
    """Largest value; among values within ``value_tol`` of it the lexicographically
    largest descending-sorted weight vector wins, then the earliest candidate."""
    if not candidates:
        raise ValueError("No certificates to choose from")
    top = max(c.value for c in candidates)
    best: Optional[LagrangianCertificate] = None
    for candidate in candidates:
        if candidate.value < top - value_tol:
            continue
        if best is None or _tie_key(candidate) > _tie_key(best):
            best = candidate
    return best


class UniversalSolverEngine:
    """Runs every applicable backend and keeps the best certificate."""

    def __init__(self, methods: Optional[Sequence[SolverMethod]] = None):
        """Initialize with backends in the order their candidates are considered.

        Args:
            methods: Backends to use; all of them by default
        """
        self.methods = list(methods) if methods is not None else [
            SolverMethod.CLOSED_FORM, SolverMethod.MOTZKIN_STRAUS,
            SolverMethod.SUPPORT_ENUM, SolverMethod.ASCENT]
        self._engines = [self._create_engine(m) for m in self.methods]

    def _create_engine(self, method: SolverMethod) -> SolverEngine:
        # pylint: disable=import-outside-toplevel
        if method == SolverMethod.CLOSED_FORM:
            from .backends.closed_form_engine import ClosedFormSolverEngine
            return ClosedFormSolverEngine()
        if method == SolverMethod.MOTZKIN_STRAUS:
            from .backends.clique_engine import CliqueSolverEngine
            return CliqueSolverEngine()
        if method == SolverMethod.SUPPORT_ENUM:
            from .backends.support_engine import SupportEnumSolverEngine
            return SupportEnumSolverEngine()
        if method == SolverMethod.ASCENT:
            from .backends.ascent_engine import AscentSolverEngine
            return AscentSolverEngine()
        raise ValueError(f"Unsupported solver method: {method}")

    def lagrangian(self, graph: Hypergraph, options: Optional[SolverOptions] = None
                   ) -> LagrangianCertificate:
        """Compute λ(G) with a certificate.

        Args:
            graph: Any r-graph
            options: Solver options; defaults when omitted

        Returns:
            The best certificate over all applicable backends
        """
        options = options or SolverOptions()
        if graph.n == 0 or not graph.edges:
            return self._empty_certificate(graph, options)
        candidates: List[LagrangianCertificate] = []
        for engine in self._engines:
            if engine.applies(graph, options):
                found = engine.solve(graph, self._budget(engine, graph, options, candidates))
                logging.debug("%s backend produced %d candidates for %s",
                              engine.method.value, len(found), graph)
                candidates.extend(found)
                if engine.exact_oracle:
                    candidates = found
                    break
        if not candidates:
            raise RuntimeError(f"No solver backend applies to {graph}")
        best = best_certificate(candidates)
        if best.kkt_residual > options.tol:
            logging.warning("Best certificate for %s has KKT residual %.3g above tol %.3g",
                            graph, best.kkt_residual, options.tol)
        return best

    @staticmethod
    def _budget(engine: SolverEngine, graph: Hypergraph, options: SolverOptions,
                candidates: Sequence[LagrangianCertificate]) -> SolverOptions:
        """Options for ``engine``; a default ascent only confirms a stationary
        support-enumeration candidate with a few starts per vertex."""
        if (engine.method is not SolverMethod.ASCENT or options.starts is not None
                or not any(c.method is SolverMethod.SUPPORT_ENUM and c.converged
                           for c in candidates)):
            return options
        return options.model_copy(update={"starts": CONFIRM_STARTS_PER_VERTEX * graph.n})

    @staticmethod
    def _empty_certificate(graph: Hypergraph, options: SolverOptions) -> LagrangianCertificate:
        # λ = 0 everywhere; uniform weights, no vertex carries an edge
        n = graph.n
        weights = WeightVector(weights=tuple([1.0 / n] * n)) if n else WeightVector(weights=())
        return LagrangianCertificate(value=0.0, weights=weights, support=(), kkt_residual=0.0,
                                     method=SolverMethod.CLOSED_FORM, starts_used=0,
                                     seed=options.seed, converged=True, exact=0,
                                     exact_weights=None)

    def get_backend_info(self) -> Dict[str, Any]:
        return {
            "methods": [m.value for m in self.methods],
            "engine_classes": [e.__class__.__name__ for e in self._engines],
        }
