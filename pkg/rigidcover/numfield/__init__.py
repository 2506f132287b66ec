"""Exact arithmetic module

Quadratic field scalars, dense exact matrices and Lorentz algebra.
"""

from .scalar import FieldScalar, as_scalar, field_zero, field_one, is_squarefree
from .matrix import FieldMatrix
from .lorentz import (
    LorentzForm,
    lorentz_product,
    reflection_matrix,
    preserves_form,
    in_lie_algebra,
    lie_algebra_basis,
    lie_algebra_dimension,
    lie_coordinates,
)

__all__ = [
    'FieldScalar',
    'FieldMatrix',
    'LorentzForm',
    'as_scalar',
    'field_zero',
    'field_one',
    'is_squarefree',
    'lorentz_product',
    'reflection_matrix',
    'preserves_form',
    'in_lie_algebra',
    'lie_algebra_basis',
    'lie_algebra_dimension',
    'lie_coordinates',
]
