"""Coboundary kernel vectors

For a choice of W_u in the Lie algebra at every base point u, the
assignment zeta(g) = W_head(g) sigma(g) - sigma(g) W_tail(g) is a
cocycle. Taking W_u = A_k at one vertex and 0 elsewhere gives
dim(G) * |V| independent kernel vectors.
"""

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Hashable, List, Sequence

from rigidcover.numfield import FieldMatrix, FieldScalar, lie_algebra_basis, lie_coordinates
from rigidcover.system.assemble import CocycleSystem
from rigidcover.system.equations import SparseRow


@dataclass(frozen=True)
class KernelVector:
    """Sparse vector in the column space of a CocycleSystem

    Attributes:
        length: Number of columns
        entries: Nonzero entries by column
        label: Origin of the vector, e.g. vertex and basis index
    """
    length: int
    entries: Dict[int, FieldScalar]
    label: str = ''

    def dense(self, d: int = 1) -> List[FieldScalar]:
        zero = FieldScalar(0, 0, d)
        return [self.entries.get(j, zero) for j in range(self.length)]


def row_value(row: SparseRow, vector: KernelVector) -> FieldScalar:
    """Exact dot product of one row with a vector"""
    total = FieldScalar(0)
    for column, coefficient in row.items():
        x = vector.entries.get(column)
        if x is not None:
            total = total + coefficient * x
    return total


def violated_rows(system: CocycleSystem, vector: KernelVector) -> List[int]:
    """Indices of rows the vector does not satisfy exactly"""
    if vector.length != system.columns:
        raise ValueError(f'Vector of length {vector.length} does not fit {system.columns} columns')
    return [i for i, row in enumerate(system.rows) if row_value(row, vector)]


def satisfies(system: CocycleSystem, vector: KernelVector) -> bool:
    return not violated_rows(system, vector)


def _put(entries: Dict[int, FieldScalar], column: int, value: FieldScalar) -> None:
    if value:
        total = entries.get(column)
        total = value if total is None else total + value
        if total:
            entries[column] = total
        else:
            entries.pop(column)


def _full_entries(system: CocycleSystem, generator: int, matrix: FieldMatrix,
                  entries: Dict[int, FieldScalar]) -> None:
    for p in range(system.size):
        for q in range(system.size):
            _put(entries, system.column(generator, p, q), matrix[p, q])


def _reduced_entries(system: CocycleSystem, generator: int, coords: Sequence[FieldScalar],
                     entries: Dict[int, FieldScalar]) -> None:
    offset = generator * system.block
    for k, value in enumerate(coords):
        _put(entries, offset + k, value)


def coboundary_vectors(system: CocycleSystem) -> List[KernelVector]:
    """One kernel vector per (base point, Lie algebra basis element)

    Args:
        system: Assembled system (full or reduced)

    Returns:
        dim(G) * |V| vectors, base points in presentation order
    """
    presentation = system.presentation
    basis = lie_algebra_basis(system.n, system.d)
    incident: Dict[Hashable, List[tuple]] = defaultdict(list)
    for g in presentation.generators:
        incident[g.head].append((g.index, True))
        incident[g.tail].append((g.index, False))

    inverses: Dict[int, FieldMatrix] = {}
    vectors = []
    for u in presentation.vertices:
        for k, a_k in enumerate(basis):
            entries: Dict[int, FieldScalar] = {}
            for index, is_head in incident[u]:
                m = system.images[index]
                if system.reduced:
                    if is_head:
                        coords = [FieldScalar(1 if j == k else 0, 0, system.d)
                                  for j in range(system.dim_g)]
                    else:
                        if index not in inverses:
                            inverses[index] = m.inverse()
                        coords = [-x for x in lie_coordinates(m @ a_k @ inverses[index], system.n)]
                    _reduced_entries(system, index, coords, entries)
                else:
                    _full_entries(system, index, a_k @ m if is_head else -(m @ a_k), entries)
            vectors.append(KernelVector(system.columns, entries, f'{u}:{k}'))
    return vectors
