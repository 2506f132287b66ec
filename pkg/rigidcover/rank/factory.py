"""Engine factory class

Creates rank engine instances based on the engine kind.
"""

from typing import List, Optional

from rigidcover.models import EngineKind
from rigidcover.rank.engine import RankEngine
from rigidcover.rank.exact import ExactEngine
from rigidcover.rank.numeric import NumericEngine
from rigidcover.utils.constants import DEFAULT_PROGRESS_EVERY, DEFAULT_SIZE_CAP


class EngineFactory:
    """Engine factory class

    Creates rank engines for an engine kind
    """

    @classmethod
    def get_engine(cls, kind: EngineKind, tolerance: Optional[float] = None,
                   size_cap: int = DEFAULT_SIZE_CAP, seed: Optional[int] = None,
                   progress_every: int = DEFAULT_PROGRESS_EVERY) -> RankEngine:
        """Get the engine for a single kind

        Args:
            kind: NUMERIC or EXACT
            tolerance: Numeric cut-off (None = auto)
            size_cap: Numeric column cap
            seed: Exact pivot tie-breaking seed
            progress_every: Exact progress logging interval

        Returns:
            RankEngine instance

        Raises:
            ValueError: kind is BOTH
        """
        if kind is EngineKind.NUMERIC:
            return NumericEngine(tolerance=tolerance, size_cap=size_cap)
        if kind is EngineKind.EXACT:
            return ExactEngine(seed=seed, progress_every=progress_every)
        raise ValueError(f'No single engine for {kind.value}; use get_engines')

    @classmethod
    def get_engines(cls, kind: EngineKind, **options) -> List[RankEngine]:
        """Engines to run for a kind, numeric first for BOTH"""
        if kind is EngineKind.BOTH:
            return [cls.get_engine(EngineKind.NUMERIC, **options),
                    cls.get_engine(EngineKind.EXACT, **options)]
        return [cls.get_engine(kind, **options)]
