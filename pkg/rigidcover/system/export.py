"""Sparse triplet export

Exact file: one nonzero per line, `row col a_num a_den b_num b_den`.
Float file: one nonzero per line, `row col <hex double>`.
Both start with a `#` header line giving rows, columns and d.
"""

import logging
from pathlib import Path
from typing import Iterator, Tuple

from rigidcover.numfield import FieldScalar
from rigidcover.system.assemble import CocycleSystem


def _header(system: CocycleSystem) -> str:
    rows, cols = system.shape
    return f'# rows={rows} cols={cols} d={system.d} mode={system.mode.value}\n'


def iter_entries(system: CocycleSystem) -> Iterator[Tuple[int, int, FieldScalar]]:
    """Nonzeros in row order, columns ascending within a row"""
    for i, row in enumerate(system.rows):
        for j in sorted(row):
            yield i, j, row[j]


def export_system(system: CocycleSystem, exact_path: Path, float_path: Path = None) -> int:
    """Write the exact triplets and (optionally) the float mirror

    Returns:
        Number of nonzeros written
    """
    count = 0
    exact_path = Path(exact_path)
    with exact_path.open('w', encoding='utf-8') as exact:
        exact.write(_header(system))
        for i, j, value in iter_entries(system):
            a_num, a_den, b_num, b_den = value.to_parts()
            exact.write(f'{i} {j} {a_num} {a_den} {b_num} {b_den}\n')
            count += 1
    if float_path is not None:
        float_path = Path(float_path)
        with float_path.open('w', encoding='utf-8') as mirror:
            mirror.write(_header(system))
            for i, j, value in iter_entries(system):
                mirror.write(f'{i} {j} {float(value).hex()}\n')
    logging.info('Exported %d nonzeros to %s', count, exact_path)
    return count


def read_exact_triplets(path: Path):
    """Read an exact export back as (shape, d, {(row, col): FieldScalar})"""
    entries = {}
    shape = (0, 0)
    d = 1
    with Path(path).open(encoding='utf-8') as handle:
        for line in handle:
            if line.startswith('#'):
                fields = dict(item.split('=', 1) for item in line[1:].split())
                shape = (int(fields['rows']), int(fields['cols']))
                d = int(fields['d'])
                continue
            i, j, a_num, a_den, b_num, b_den = (int(x) for x in line.split())
            entries[(i, j)] = FieldScalar.from_parts(a_num, a_den, b_num, b_den, d)
    return shape, d, entries
