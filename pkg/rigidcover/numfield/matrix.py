"""Dense exact matrices over Q(sqrt(d))"""

from typing import Iterable, List, Sequence, Tuple

import numpy as np

from rigidcover.numfield.scalar import FieldScalar, ScalarLike, as_scalar
from rigidcover.utils.exceptions import FieldError


class FieldMatrix:
    """Dense matrix with FieldScalar entries sharing one discriminant

    Immutable; arithmetic returns new matrices.

    Attributes:
        rows: Number of rows
        cols: Number of columns
        d: Discriminant shared by all entries
        entries: Tuple of row tuples
    """

    __slots__ = ('rows', 'cols', 'd', 'entries')

    def __init__(self, entries: Sequence[Sequence[ScalarLike]], d: int = 1):
        rows = len(entries)
        if rows == 0 or len(entries[0]) == 0:
            raise FieldError('FieldMatrix needs at least one row and one column')
        cols = len(entries[0])
        if any(len(row) != cols for row in entries):
            raise FieldError('FieldMatrix rows have different lengths')
        for row in entries:
            for x in row:
                if isinstance(x, FieldScalar) and x.d != 1:
                    if d == 1:
                        d = x.d
                    elif x.d != d:
                        raise FieldError(f'Discriminant mismatch: {x.d} vs {d}')
        self.rows = rows
        self.cols = cols
        self.d = d
        self.entries: Tuple[Tuple[FieldScalar, ...], ...] = tuple(
            tuple(as_scalar(x, d) for x in row) for row in entries
        )

    @classmethod
    def identity(cls, size: int, d: int = 1) -> 'FieldMatrix':
        return cls([[1 if i == j else 0 for j in range(size)] for i in range(size)], d)

    @classmethod
    def zeros(cls, rows: int, cols: int, d: int = 1) -> 'FieldMatrix':
        return cls([[0] * cols for _ in range(rows)], d)

    @classmethod
    def diagonal(cls, values: Sequence[ScalarLike], d: int = 1) -> 'FieldMatrix':
        size = len(values)
        return cls([[values[i] if i == j else 0 for j in range(size)] for i in range(size)], d)

    @classmethod
    def outer(cls, u: Sequence[ScalarLike], v: Sequence[ScalarLike], d: int = 1) -> 'FieldMatrix':
        """Outer product u v^T"""
        u = [as_scalar(x, d) for x in u]
        v = [as_scalar(x, d) for x in v]
        return cls([[x * y for y in v] for x in u], d)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: Tuple[int, int]) -> FieldScalar:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Tuple[FieldScalar, ...]:
        return self.entries[i]

    def column(self, j: int) -> Tuple[FieldScalar, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> 'FieldMatrix':
        return FieldMatrix([list(col) for col in zip(*self.entries)], self.d)

    @property
    def T(self) -> 'FieldMatrix':
        return self.transpose()

    def _check_same_shape(self, other: 'FieldMatrix') -> None:
        if self.shape != other.shape:
            raise FieldError(f'Shape mismatch: {self.shape} vs {other.shape}')

    def __add__(self, other: 'FieldMatrix') -> 'FieldMatrix':
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return FieldMatrix([[x + y for x, y in zip(r, s)]
                            for r, s in zip(self.entries, other.entries)], self.d)

    def __sub__(self, other: 'FieldMatrix') -> 'FieldMatrix':
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return FieldMatrix([[x - y for x, y in zip(r, s)]
                            for r, s in zip(self.entries, other.entries)], self.d)

    def __neg__(self) -> 'FieldMatrix':
        return FieldMatrix([[-x for x in row] for row in self.entries], self.d)

    def scale(self, factor: ScalarLike) -> 'FieldMatrix':
        return FieldMatrix([[x * factor for x in row] for row in self.entries], self.d)

    def __mul__(self, factor: ScalarLike) -> 'FieldMatrix':
        if isinstance(factor, FieldMatrix):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def __matmul__(self, other: 'FieldMatrix') -> 'FieldMatrix':
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise FieldError(f'Cannot multiply {self.shape} by {other.shape}')
        other_cols = other.transpose().entries
        result = []
        for row in self.entries:
            out = []
            for col in other_cols:
                acc = FieldScalar(0, 0, self.d)
                for x, y in zip(row, col):
                    if x and y:
                        acc = acc + x * y
                out.append(acc)
            result.append(out)
        return FieldMatrix(result, self.d if self.d != 1 else other.d)

    def apply(self, vector: Sequence[ScalarLike]) -> List[FieldScalar]:
        """Matrix-vector product"""
        if len(vector) != self.cols:
            raise FieldError(f'Vector length {len(vector)} does not match {self.cols} columns')
        return [sum((x * as_scalar(v, self.d) for x, v in zip(row, vector)),
                    FieldScalar(0, 0, self.d))
                for row in self.entries]

    def inverse(self) -> 'FieldMatrix':
        """Exact inverse by Gauss-Jordan elimination

        Raises:
            FieldError: Matrix is not square
            ZeroDivisionError: Matrix is singular
        """
        if self.rows != self.cols:
            raise FieldError(f'Cannot invert non-square matrix {self.shape}')
        size = self.rows
        work = [list(row) + [FieldScalar(1 if i == j else 0, 0, self.d) for j in range(size)]
                for i, row in enumerate(self.entries)]
        for col in range(size):
            pivot = next((r for r in range(col, size) if work[r][col]), None)
            if pivot is None:
                raise ZeroDivisionError('FieldMatrix is singular')
            work[col], work[pivot] = work[pivot], work[col]
            inv = work[col][col].inverse()
            work[col] = [x * inv for x in work[col]]
            for r in range(size):
                if r != col and work[r][col]:
                    factor = work[r][col]
                    work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
        return FieldMatrix([row[size:] for row in work], self.d)

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            x == (1 if i == j else 0)
            for i, row in enumerate(self.entries) for j, x in enumerate(row)
        )

    def is_zero(self) -> bool:
        return all(not x for row in self.entries for x in row)

    def flatten(self) -> List[FieldScalar]:
        """Row-major list of entries"""
        return [x for row in self.entries for x in row]

    def to_float(self) -> np.ndarray:
        """Float embedding as a numpy array"""
        return np.array([[float(x) for x in row] for row in self.entries], dtype=float)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        body = '; '.join(' '.join(str(x) for x in row) for row in self.entries)
        return f'FieldMatrix([{body}], d={self.d})'


def stack_flat(matrices: Iterable[FieldMatrix]) -> List[List[FieldScalar]]:
    """Flatten each matrix into a row vector"""
    return [m.flatten() for m in matrices]
