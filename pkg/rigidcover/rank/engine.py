"""Rank engine base class

Defines the abstract interface shared by the numeric and exact engines.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from rigidcover.models import EngineKind
from rigidcover.system import CocycleSystem
from rigidcover.utils.executor import map_ordered


@dataclass
class NullityResult:
    """Outcome of one engine run

    Attributes:
        engine: Engine that produced the result
        rows: Row count of the system
        cols: Column count of the system
        rank: Computed rank
        nullity: cols - rank
        singular_values: Full spectrum, descending (numeric engine only)
        tolerance: Cut-off applied to the spectrum (numeric engine only)
        gap_ratio: Smallest kept over largest discarded singular value
            (numeric engine only; inf when either side is empty or the
            largest discarded value is zero)
    """
    engine: EngineKind
    rows: int
    cols: int
    rank: int
    nullity: int
    singular_values: Optional[List[float]] = None
    tolerance: Optional[float] = None
    gap_ratio: Optional[float] = None

    def certified(self, threshold: float) -> bool:
        """Exact results are always certified; numeric ones need a wide gap"""
        if self.engine is EngineKind.EXACT:
            return True
        return self.gap_ratio is not None and self.gap_ratio >= threshold


class RankEngine(ABC):
    """Rank engine base class

    All engines take an immutable CocycleSystem and return a fresh result.
    """

    kind: EngineKind

    @abstractmethod
    def nullity(self, system: CocycleSystem) -> NullityResult:
        """Compute the nullity of a system

        Args:
            system: Assembled cocycle system

        Returns:
            NullityResult instance

        Raises:
            EngineError: The engine cannot handle the system
        """
        pass


def _nullity_job(job: Tuple[RankEngine, CocycleSystem]) -> NullityResult:
    engine, system = job
    return engine.nullity(system)


def run_engines(engines: Sequence[RankEngine], systems: Sequence[CocycleSystem],
                workers: int = 1) -> List[List[NullityResult]]:
    """Run every engine on every system

    Each elimination is independent of the others, so the pairs are spread
    over the workers. A single elimination always runs in one process.

    Args:
        engines: Engines to run, in report order
        systems: Assembled systems
        workers: Number of worker processes (1 = run inline)

    Returns:
        One list per system holding the engines' results in the given order
    """
    jobs = [(engine, system) for system in systems for engine in engines]
    results = map_ordered(_nullity_job, jobs, workers=workers, chunksize=1)
    width = len(engines)
    return [results[k:k + width] for k in range(0, len(results), width)]
