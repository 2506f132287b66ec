"""Cyclic cover module

Windows F_[m,n] of the infinite cyclic cover, the zigzag check and state search.
"""

from .window import (
    LiftedVertex,
    LiftedEdge,
    LiftedSquare,
    CoverWindow,
    build_window,
    build_window_s,
    monodromy_shift,
    expected_counts,
    level_step,
)
from .zigzag import ZigzagResult, check_zigzag, check_zigzag_offset, zigzag_table, offsets_for
from .search import search_states, all_states, canonical

__all__ = [
    'LiftedVertex',
    'LiftedEdge',
    'LiftedSquare',
    'CoverWindow',
    'build_window',
    'build_window_s',
    'monodromy_shift',
    'expected_counts',
    'level_step',
    'ZigzagResult',
    'check_zigzag',
    'check_zigzag_offset',
    'zigzag_table',
    'offsets_for',
    'search_states',
    'all_states',
    'canonical',
]
