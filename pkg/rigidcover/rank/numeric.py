"""Floating-point rank by singular value decomposition"""

import logging
import math
from typing import Optional, Tuple

import numpy as np

from rigidcover.models import EngineKind
from rigidcover.rank.engine import NullityResult, RankEngine
from rigidcover.system import CocycleSystem
from rigidcover.utils.constants import DEFAULT_SIZE_CAP
from rigidcover.utils.exceptions import SizeCapError


def auto_tolerance(singular_values: np.ndarray, shape: Tuple[int, int]) -> float:
    """max(rows, cols) * eps * sigma_1"""
    if singular_values.size == 0:
        return 0.0
    return max(shape) * np.finfo(float).eps * float(singular_values[0])


def gap_ratio(singular_values: np.ndarray, tolerance: float) -> float:
    """Smallest kept singular value over the largest discarded one"""
    kept = singular_values[singular_values > tolerance]
    dropped = singular_values[singular_values <= tolerance]
    if kept.size == 0 or dropped.size == 0:
        return math.inf
    largest_dropped = float(dropped.max())
    if largest_dropped == 0.0:
        return math.inf
    return float(kept.min()) / largest_dropped


def spectrum_nullity(matrix: np.ndarray, tolerance: Optional[float] = None) -> NullityResult:
    """Nullity of a dense matrix from its singular values

    Args:
        matrix: Dense float matrix
        tolerance: Absolute cut-off (None = auto_tolerance)

    Returns:
        NullityResult with the descending spectrum
    """
    rows, cols = matrix.shape
    if matrix.size == 0:
        values = np.zeros(0)
    else:
        values = np.linalg.svd(matrix, compute_uv=False)
    tol = auto_tolerance(values, matrix.shape) if tolerance is None else float(tolerance)
    rank = int(np.count_nonzero(values > tol))
    return NullityResult(
        engine=EngineKind.NUMERIC,
        rows=rows,
        cols=cols,
        rank=rank,
        nullity=cols - rank,
        singular_values=[float(x) for x in values],
        tolerance=tol,
        gap_ratio=gap_ratio(values, tol),
    )


class NumericEngine(RankEngine):
    """Dense SVD engine

    Attributes:
        tolerance: Absolute cut-off, None for auto
        size_cap: Largest column count handled for full systems
    """

    kind = EngineKind.NUMERIC

    def __init__(self, tolerance: Optional[float] = None, size_cap: int = DEFAULT_SIZE_CAP):
        self.tolerance = tolerance
        self.size_cap = size_cap

    def nullity(self, system: CocycleSystem) -> NullityResult:
        """Nullity from the float mirror

        Raises:
            SizeCapError: Full system wider than size_cap
        """
        rows, cols = system.shape
        if cols > self.size_cap and not system.reduced:
            raise SizeCapError(
                f'System has {cols} columns, above the numeric cap of {self.size_cap}; '
                'enable tangency reduction or raise the cap'
            )
        logging.info('Numeric engine: SVD of %dx%d system', rows, cols)
        result = spectrum_nullity(system.to_dense(), self.tolerance)
        logging.info('Numeric engine: rank %d, nullity %d, tolerance %.3e, gap %.3e',
                     result.rank, result.nullity, result.tolerance, result.gap_ratio)
        return result
