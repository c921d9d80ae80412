from fractions import Fraction
from math import comb
from typing import List

import numpy as np

from ...models import Hypergraph, LagrangianCertificate, SolverMethod, SolverOptions
from .base_engine import BaseSolverEngine


class ClosedFormSolverEngine(BaseSolverEngine):
    """Complete graphs: λ(K_t^r) = C(t, r) / t^r at uniform weights."""

    method = SolverMethod.CLOSED_FORM
    exact_oracle = True

    def applies(self, graph: Hypergraph, options: SolverOptions) -> bool:
        return (options.use_exact_oracle and graph.n >= graph.r
                and graph.edge_count == comb(graph.n, graph.r))

    def solve(self, graph: Hypergraph, options: SolverOptions) -> List[LagrangianCertificate]:
        t, r = graph.n, graph.r
        x = np.full(t, 1.0 / t)
        return [self.certify(graph, x, options, polish=False,
                             exact=Fraction(comb(t, r), t ** r),
                             exact_weights=[Fraction(1, t)] * t)]
