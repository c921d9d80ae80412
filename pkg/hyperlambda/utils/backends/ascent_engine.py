import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ...models import Edge, Hypergraph, LagrangianCertificate, SolverMethod, SolverOptions
from ..canonical_utils import automorphism_orbits
from ..config import MAX_CANONICAL_VERTICES
from ..lagrangian_utils import _poly, staged_ascend_array
from ..parallel_utils import generator_from, parallel_map, spawn_seed_sequences
from .base_engine import BaseSolverEngine

# (r, n, edges, orbits, seed sequence or None for the uniform start, tol, max_iters)
StartTask = Tuple[int, int, Tuple[Edge, ...], Optional[List[List[int]]],
                  Optional[np.random.SeedSequence], float, int]


def random_start(n: int, rng: np.random.Generator,
                 orbits: Optional[Sequence[Sequence[int]]] = None) -> np.ndarray:
    """Dirichlet(1, ..., 1) point, optionally spread evenly within each orbit."""
    if not orbits:
        return rng.dirichlet(np.ones(n))
    mass = rng.dirichlet(np.ones(len(orbits)))
    x = np.zeros(n)
    for share, orbit in zip(mass, orbits):
        x[[v - 1 for v in orbit]] = share / len(orbit)
    return x


def run_start(task: StartTask) -> Tuple[float, np.ndarray]:
    """One staged ascent; module level so worker processes can unpickle it."""
    r, n, edges, orbits, sequence, tol, max_iters = task
    edge_arr = np.asarray(edges, dtype=np.int64).reshape(-1, r) - 1
    if sequence is None:
        x0 = np.full(n, 1.0 / n)
    else:
        x0 = random_start(n, generator_from(sequence), orbits)
    x, _, _ = staged_ascend_array(edge_arr, r, n, x0, tol, max_iters)
    return _poly(edge_arr, x), x


class AscentSolverEngine(BaseSolverEngine):
    """Multistart growth-transform ascent.

    Start 0 is the uniform point; the rest come from independent Philox
    streams spawned from the seed, alternating between orbit-collapsed and
    plain Dirichlet draws.
    """

    method = SolverMethod.ASCENT

    def solve(self, graph: Hypergraph, options: SolverOptions) -> List[LagrangianCertificate]:
        starts = max(1, options.starts_for(graph.n))
        orbits = (automorphism_orbits(graph)
                  if starts > 1 and graph.n <= MAX_CANONICAL_VERTICES else None)
        sequences = spawn_seed_sequences(options.seed, starts - 1)
        tasks: List[StartTask] = [(graph.r, graph.n, graph.edges, None, None,
                                   options.tol, options.max_iters)]
        for k, sequence in enumerate(sequences):
            tasks.append((graph.r, graph.n, graph.edges, orbits if k % 2 == 0 else None,
                          sequence, options.tol, options.max_iters))
        results = parallel_map(run_start, tasks, options.jobs)
        top = max(value for value, _ in results)
        best_value, best_x = max(
            (item for item in results if item[0] >= top - 1e-12),
            key=lambda item: tuple(np.round(np.sort(item[1])[::-1], 12)))
        logging.debug("Multistart ascent on %s: %d starts, best %.12g",
                      graph, starts, best_value)
        return [self.certify(graph, best_x, options, starts_used=starts)]
