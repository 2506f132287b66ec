"""Cocycle system module

Groupoid presentations, tangency and relator rows, system assembly,
coboundary vectors and sparse export.
"""

from .presentation import (
    Generator,
    Relator,
    Presentation,
    square_word,
    presentation_of,
    presentation_of_complex,
    presentation_of_window,
)
from .equations import (
    SparseRow,
    tangency_rows,
    relator_rows,
    reduced_relator_rows,
    generic_terms,
    simplified_terms,
)
from .assemble import (
    CocycleSystem,
    assign_images,
    assemble,
    assemble_base,
    build_system,
    reduce_tangency,
    approximate_system_size,
)
from .coboundary import KernelVector, coboundary_vectors, row_value, satisfies, violated_rows
from .export import export_system, iter_entries, read_exact_triplets

__all__ = [
    'Generator',
    'Relator',
    'Presentation',
    'square_word',
    'presentation_of',
    'presentation_of_complex',
    'presentation_of_window',
    'SparseRow',
    'tangency_rows',
    'relator_rows',
    'reduced_relator_rows',
    'generic_terms',
    'simplified_terms',
    'CocycleSystem',
    'assign_images',
    'assemble',
    'assemble_base',
    'build_system',
    'reduce_tangency',
    'approximate_system_size',
    'KernelVector',
    'coboundary_vectors',
    'row_value',
    'satisfies',
    'violated_rows',
    'export_system',
    'iter_entries',
    'read_exact_triplets',
]
