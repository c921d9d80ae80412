import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Sequence, TypeVar

import numpy as np

T = TypeVar("T")
R = TypeVar("R")


def spawn_generators(seed: int, count: int) -> List[np.random.Generator]:
    """Independent Philox streams derived from one root seed.

    Stream k depends only on (seed, k), so results do not change with the
    number of worker processes.
    """
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.Generator(np.random.Philox(child)) for child in children]


def spawn_seed_sequences(seed: int, count: int) -> List[np.random.SeedSequence]:
    return np.random.SeedSequence(seed).spawn(count)


def generator_from(sequence: np.random.SeedSequence) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(sequence))


def parallel_map(function: Callable[[T], R], items: Sequence[T], jobs: int = 1) -> List[R]:
    """Apply ``function`` to every item, keeping input order in the result.

    With ``jobs`` <= 1 or fewer than two items everything runs in-process.
    ``function`` and the items must be picklable otherwise.
    """
    if jobs <= 1 or len(items) < 2:
        return [function(item) for item in items]
    workers = min(jobs, len(items))
    logging.debug("Dispatching %d tasks to %d worker processes", len(items), workers)
    chunksize = max(1, len(items) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as executor:
        try:
            return list(executor.map(function, items, chunksize=chunksize))
        except Exception as e:
            logging.error("Worker process failed in %s: %s", function.__name__, e)
            raise RuntimeError(f"Worker process failed in {function.__name__}: {e}") from e
