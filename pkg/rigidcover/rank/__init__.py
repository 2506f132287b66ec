"""Rank module

Numeric and exact nullity engines, H1 accounting, the groupoid/group
oracle and rank reports.
"""

from .engine import NullityResult, RankEngine, run_engines
from .numeric import NumericEngine, auto_tolerance, gap_ratio, spectrum_nullity
from .exact import (
    ExactEngine,
    FractionFreeElimination,
    exact_rank,
    vector_rank,
    kernel_basis,
    to_pair_row,
)
from .factory import EngineFactory
from .accounting import H1Bound, h1_bound, agreed_nullity, decide_verdict
from .oracle import OracleReport, groupoid_group_oracle, spanning_tree, tree_rows
from .report import RankReport, CSV_COLUMNS, write_csv

__all__ = [
    'NullityResult',
    'RankEngine',
    'run_engines',
    'NumericEngine',
    'auto_tolerance',
    'gap_ratio',
    'spectrum_nullity',
    'ExactEngine',
    'FractionFreeElimination',
    'exact_rank',
    'vector_rank',
    'kernel_basis',
    'to_pair_row',
    'EngineFactory',
    'H1Bound',
    'h1_bound',
    'agreed_nullity',
    'decide_verdict',
    'OracleReport',
    'groupoid_group_oracle',
    'spanning_tree',
    'tree_rows',
    'RankReport',
    'CSV_COLUMNS',
    'write_csv',
]
