"""Lorentz form, reflections and the Lie algebra of O(n,1)

All constructions are exact over Q(sqrt(d)).
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence

from rigidcover.numfield.matrix import FieldMatrix
from rigidcover.numfield.scalar import FieldScalar, ScalarLike, as_scalar
from rigidcover.utils.exceptions import FieldError


@dataclass(frozen=True)
class LorentzForm:
    """Diagonal form (1, ..., 1, -1) of size n + 1

    Attributes:
        n: Spatial dimension
        d: Discriminant of the field the form is used over
    """
    n: int
    d: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise FieldError(f'Lorentz form needs n >= 1, got {self.n}')

    @property
    def size(self) -> int:
        return self.n + 1

    @property
    def matrix(self) -> FieldMatrix:
        return _form_matrix(self.n, self.d)

    def signs(self) -> List[int]:
        return [1] * self.n + [-1]


@lru_cache(maxsize=None)
def _form_matrix(n: int, d: int) -> FieldMatrix:
    return FieldMatrix.diagonal([1] * n + [-1], d)


def lorentz_product(u: Sequence[ScalarLike], v: Sequence[ScalarLike],
                    form: LorentzForm) -> FieldScalar:
    """Return u^T J v

    Raises:
        FieldError: Vector lengths do not match the form
    """
    if len(u) != form.size or len(v) != form.size:
        raise FieldError(
            f'Vectors of length {len(u)} and {len(v)} do not match a form of size {form.size}'
        )
    total = FieldScalar(0, 0, form.d)
    for sign, x, y in zip(form.signs(), u, v):
        term = as_scalar(x, form.d) * as_scalar(y, form.d)
        total = total + term if sign > 0 else total - term
    return total


def reflection_matrix(normal: Sequence[ScalarLike], form: LorentzForm) -> FieldMatrix:
    """Reflection in the hyperplane orthogonal to a spacelike normal

    R = I - (2 / <v,v>) v v^T J. The normal does not need to be unit.

    Raises:
        FieldError: Normal is not spacelike
    """
    v = [as_scalar(x, form.d) for x in normal]
    norm = lorentz_product(v, v, form)
    if norm.sign() <= 0:
        raise FieldError(f'Normal {[str(x) for x in v]} is not spacelike (<v,v> = {norm})')
    factor = FieldScalar(2, 0, form.d) / norm
    jv = [x if sign > 0 else -x for sign, x in zip(form.signs(), v)]
    size = form.size
    return FieldMatrix(
        [[(1 if i == j else 0) - factor * v[i] * jv[j] for j in range(size)]
         for i in range(size)],
        form.d,
    )


def preserves_form(matrix: FieldMatrix, form: LorentzForm) -> bool:
    """Check M^T J M = J exactly"""
    return matrix.T @ form.matrix @ matrix == form.matrix


def in_lie_algebra(matrix: FieldMatrix, form: LorentzForm) -> bool:
    """Check A^T J + J A = 0 exactly"""
    j = form.matrix
    return (matrix.T @ j + j @ matrix).is_zero()


def lie_algebra_dimension(n: int) -> int:
    """dim O(n,1) = n(n+1)/2"""
    return n * (n + 1) // 2


@lru_cache(maxsize=None)
def _basis(n: int, d: int) -> tuple:
    size = n + 1
    basis = []
    # rotations of the spatial block
    for i in range(n):
        for j in range(i + 1, n):
            entries = [[0] * size for _ in range(size)]
            entries[i][j] = 1
            entries[j][i] = -1
            basis.append(FieldMatrix(entries, d))
    # boosts coupling coordinate i with the time coordinate
    for i in range(n):
        entries = [[0] * size for _ in range(size)]
        entries[i][n] = 1
        entries[n][i] = 1
        basis.append(FieldMatrix(entries, d))
    return tuple(basis)


def lie_algebra_basis(n: int, d: int = 1) -> List[FieldMatrix]:
    """Basis of the Lie algebra of O(n,1)

    Spatial rotations E_ij - E_ji (i < j < n) followed by boosts
    E_in + E_ni (i < n).

    Args:
        n: Spatial dimension (>= 2)
        d: Discriminant of the ambient field

    Returns:
        n(n+1)/2 matrices

    Raises:
        ValueError: n < 2
    """
    if n < 2:
        raise ValueError(f'Lie algebra basis needs n >= 2, got {n}')
    return list(_basis(n, d))


def lie_coordinates(matrix: FieldMatrix, n: int) -> List[FieldScalar]:
    """Coordinates of a Lie algebra element in lie_algebra_basis order

    Args:
        matrix: Element of the Lie algebra (not checked)
        n: Spatial dimension

    Returns:
        n(n+1)/2 scalars
    """
    coords = [matrix[i, j] for i in range(n) for j in range(i + 1, n)]
    coords.extend(matrix[i, n] for i in range(n))
    return coords
