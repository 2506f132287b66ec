"""Coloured cube complex module

Colourings, states, the oriented dual cube complex C and its checks.
"""

from .colouring import (
    Colouring,
    validate_colouring,
    require_proper_colouring,
    parse_colouring,
    load_colouring,
)
from .states import (
    State,
    StateRule,
    Vertex,
    propagate_states,
    state_at,
    vertices_of_cube,
    parse_state,
    load_state,
    format_state,
)
from .oriented import (
    Edge,
    Square,
    OrientedComplex,
    build_oriented_complex,
    classify_square,
    strata_count,
    is_even,
    toggle,
)
from .cubes import (
    Cube,
    enumerate_cubes,
    is_quasi_coherent,
    validate_quasi_coherence,
    require_quasi_coherence,
    state_is_quasi_coherent,
)
from .links import LinkStatus, check_links, require_links, link_status, state_passes_links

__all__ = [
    'Colouring',
    'validate_colouring',
    'require_proper_colouring',
    'parse_colouring',
    'load_colouring',
    'State',
    'StateRule',
    'Vertex',
    'propagate_states',
    'state_at',
    'vertices_of_cube',
    'parse_state',
    'load_state',
    'format_state',
    'Edge',
    'Square',
    'OrientedComplex',
    'build_oriented_complex',
    'classify_square',
    'strata_count',
    'is_even',
    'toggle',
    'Cube',
    'enumerate_cubes',
    'is_quasi_coherent',
    'validate_quasi_coherence',
    'require_quasi_coherence',
    'state_is_quasi_coherent',
    'LinkStatus',
    'check_links',
    'require_links',
    'link_status',
    'state_passes_links',
]
