"""Worker executor

Fans pure functions out across worker processes.
"""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from rigidcover.utils.constants import ENV_WORKERS

T = TypeVar('T')
R = TypeVar('R')


def worker_count(requested: Optional[int] = None) -> int:
    """Resolve the number of workers

    Args:
        requested: Explicit worker count (None = use environment)

    Returns:
        Worker count, at least 1
    """
    if requested is not None:
        return max(1, requested)
    value = os.environ.get(ENV_WORKERS, '').strip()
    if value:
        try:
            return max(1, int(value))
        except ValueError:
            logging.warning('Ignoring non-integer %s=%r', ENV_WORKERS, value)
    return 1


def map_ordered(func: Callable[[T], R], items: Iterable[T],
                workers: int = 1, chunksize: int = 16) -> List[R]:
    """Apply func to every item, preserving input order

    Args:
        func: Picklable pure function
        items: Inputs
        workers: Number of worker processes (1 = run inline)
        chunksize: Items per task when running in parallel

    Returns:
        Results in input order

    Note:
        Results are ordered like the inputs regardless of worker count,
        so reports stay deterministic.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    logging.info('Dispatching %d tasks to %d workers', len(items), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items, chunksize=chunksize))
