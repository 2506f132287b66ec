"""Tangency and relator equations

Every generator g carries an unknown (n+1)x(n+1) matrix D_g, flattened
row-major into columns g*(n+1)^2 + p*(n+1) + q. Rows are sparse maps
column -> FieldScalar.
"""

from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from rigidcover.models import AssemblyMode
from rigidcover.numfield import FieldMatrix, FieldScalar, LorentzForm
from rigidcover.system.presentation import Relator
from rigidcover.utils.exceptions import RelatorShapeError

SparseRow = Dict[int, FieldScalar]
Term = Tuple[FieldMatrix, int, FieldMatrix]


def _add(row: SparseRow, column: int, value: FieldScalar) -> None:
    if not value:
        return
    total = row.get(column)
    total = value if total is None else total + value
    if total:
        row[column] = total
    else:
        row.pop(column, None)


def tangency_rows(generator: int, image: FieldMatrix, form: LorentzForm) -> List[SparseRow]:
    """Rows of D^T J M + (J M)^T D = 0 for one generator

    Their solutions are the tangent vectors A M (A in the Lie algebra).

    Returns:
        (n+1)^2 rows indexed by (a, b)
    """
    size = form.size
    offset = generator * size * size
    k = form.matrix @ image
    rows = []
    for a in range(size):
        for b in range(size):
            row: SparseRow = {}
            for p in range(size):
                _add(row, offset + p * size + a, k[p, b])
                _add(row, offset + p * size + b, k[p, a])
            rows.append(row)
    return rows


@lru_cache(maxsize=None)
def _inverse(matrix: FieldMatrix) -> FieldMatrix:
    return matrix.inverse()


def _product(matrices: Sequence[FieldMatrix], size: int, d: int) -> FieldMatrix:
    result = FieldMatrix.identity(size, d)
    for m in matrices:
        result = result @ m
    return result


def generic_terms(relator: Relator, images: Sequence[FieldMatrix],
                  size: int, d: int) -> List[Term]:
    """First-order expansion of the relator word

    The derivative of X_1 ... X_h is the sum over letters of
    prefix * X_k' * suffix, where X' = D for a positive letter and
    X' = -M^-1 D M^-1 for an inverse letter.

    Returns:
        (L, generator, R) triples with sum of L D_g R equal to the derivative
    """
    factors = []
    for g, sign in relator.letters:
        factors.append(images[g] if sign > 0 else _inverse(images[g]))
    terms = []
    for k, (g, sign) in enumerate(relator.letters):
        prefix = _product(factors[:k], size, d)
        suffix = _product(factors[k + 1:], size, d)
        if sign > 0:
            terms.append((prefix, g, suffix))
        else:
            inverse = _inverse(images[g])
            terms.append((-(prefix @ inverse), g, inverse @ suffix))
    return terms


def simplified_terms(relator: Relator, images: Sequence[FieldMatrix],
                     size: int, d: int) -> List[Term]:
    """Closed form D1 M1 - M1 M2 D2 M1 + M1 M2 D3 M2 - D4 M2

    Valid for words g1 g2^-1 g3 g4^-1 whose images satisfy M1 = M3,
    M2 = M4, M1 M2 = M2 M1 and M1^2 = M2^2 = I.

    Raises:
        RelatorShapeError: The word or its images do not have this shape
    """
    signs = tuple(sign for _, sign in relator.letters)
    if signs != (1, -1, 1, -1):
        raise RelatorShapeError(f'Relator of square {relator.square} is not of the form g1 g2^-1 g3 g4^-1')
    (g1, _), (g2, _), (g3, _), (g4, _) = relator.letters
    m1, m2 = images[g1], images[g2]
    identity = FieldMatrix.identity(size, d)
    if images[g3] != m1 or images[g4] != m2:
        raise RelatorShapeError(f'Opposite sides of square {relator.square} have different images')
    m1m2 = m1 @ m2
    if m1m2 != m2 @ m1:
        raise RelatorShapeError(f'Images on square {relator.square} do not commute')
    if m1 @ m1 != identity or m2 @ m2 != identity:
        raise RelatorShapeError(f'Images on square {relator.square} are not involutions')
    return [
        (identity, g1, m1),
        (-m1m2, g2, m1),
        (m1m2, g3, m2),
        (-identity, g4, m2),
    ]


def relator_terms(relator: Relator, images: Sequence[FieldMatrix], mode: AssemblyMode,
                  size: int, d: int) -> List[Term]:
    if mode is AssemblyMode.GENERIC:
        return generic_terms(relator, images, size, d)
    if mode is AssemblyMode.SIMPLIFIED:
        return simplified_terms(relator, images, size, d)
    raise ValueError(f'Relator rows need a single assembly mode, got {mode.value}')


def relator_rows(relator: Relator, images: Sequence[FieldMatrix], mode: AssemblyMode,
                 form: LorentzForm) -> List[SparseRow]:
    """Rows expressing that the relator vanishes to first order

    Returns:
        (n+1)^2 rows indexed by (a, b); the coefficient of D_g[p, q] in
        row (a, b) is the sum over terms of L[a, p] * R[q, b]
    """
    size = form.size
    terms = relator_terms(relator, images, mode, size, form.d)
    rows = []
    for a in range(size):
        for b in range(size):
            row: SparseRow = {}
            for left, g, right in terms:
                offset = g * size * size
                for p in range(size):
                    x = left[a, p]
                    if not x:
                        continue
                    for q in range(size):
                        y = right[q, b]
                        if y:
                            _add(row, offset + p * size + q, x * y)
            rows.append(row)
    return rows


def reduced_relator_rows(relator: Relator, images: Sequence[FieldMatrix], mode: AssemblyMode,
                         form: LorentzForm, basis: Sequence[FieldMatrix]) -> List[SparseRow]:
    """Relator rows after substituting D_g = sum_k x_(g,k) A_k M_g

    Columns are g * dim(G) + k.
    """
    size = form.size
    dim_g = len(basis)
    terms = relator_terms(relator, images, mode, size, form.d)
    products = []
    for left, g, right in terms:
        for k, a_k in enumerate(basis):
            products.append((g * dim_g + k, left @ a_k @ images[g] @ right))
    rows = []
    for a in range(size):
        for b in range(size):
            row: SparseRow = {}
            for column, matrix in products:
                _add(row, column, matrix[a, b])
            rows.append(row)
    return rows
