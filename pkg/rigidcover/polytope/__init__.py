"""Polytope module

Right-angled polytope data: loading, adjacency, codimension-2 faces.
"""

from .models import Facet, DeclaredCounts, Polytope
from .loader import (
    build_polytope,
    compute_adjacency,
    enumerate_codim2,
    check_commuting_reflections,
    load_polytope,
    polytope_from_dict,
)
from .builtin import builtin_octahedron, builtin_24cell

__all__ = [
    'Facet',
    'DeclaredCounts',
    'Polytope',
    'build_polytope',
    'compute_adjacency',
    'enumerate_codim2',
    'check_commuting_reflections',
    'load_polytope',
    'polytope_from_dict',
    'builtin_octahedron',
    'builtin_24cell',
]
