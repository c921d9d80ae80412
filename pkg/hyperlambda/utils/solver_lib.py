import logging
from typing import Optional

from ..models import Hypergraph, LagrangianCertificate, SolverOptions
from .solver_engine import UniversalSolverEngine

_solver_engine: Optional[UniversalSolverEngine] = None


def get_solver_engine() -> UniversalSolverEngine:
    """Get or create the global solver engine instance."""
    # pylint: disable=global-statement
    global _solver_engine
    if _solver_engine is None:
        _solver_engine = UniversalSolverEngine()
        logging.debug("Created solver engine with backends %s",
                      _solver_engine.get_backend_info()["methods"])
    return _solver_engine


def lagrangian(graph: Hypergraph, options: Optional[SolverOptions] = None) -> LagrangianCertificate:
    """λ(G) with a certificate, using every applicable backend."""
    return get_solver_engine().lagrangian(graph, options)
