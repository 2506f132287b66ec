"""Exact rank by fraction-free sparse elimination over Q(sqrt(d))

Rows are scaled to integer pairs (x, y) standing for x + y*sqrt(d).
A pivot step replaces every row r holding the pivot column by
pi * r - rho * p, where pi is the pivot and rho the entry of r, then
strips the integer content of r. No rational division happens until a
kernel basis is read off.

Pivots follow a Markowitz rule: the column with the fewest nonzeros,
then its shortest row. A seed shuffles ties.
"""

import logging
import math
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from rigidcover.models import EngineKind
from rigidcover.numfield import FieldScalar
from rigidcover.rank.engine import NullityResult, RankEngine
from rigidcover.system import CocycleSystem, KernelVector, SparseRow
from rigidcover.utils.constants import DEFAULT_PROGRESS_EVERY

Pair = Tuple[int, int]
PairRow = Dict[int, Pair]


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _strip(row: PairRow) -> PairRow:
    content = 0
    for x, y in row.values():
        content = math.gcd(math.gcd(content, x), y)
        if content == 1:
            return row
    if content > 1:
        return {j: (x // content, y // content) for j, (x, y) in row.items()}
    return row


def to_pair_row(row: SparseRow) -> PairRow:
    """Scale a row of FieldScalars to primitive integer pairs"""
    scale = 1
    for value in row.values():
        scale = _lcm(scale, value.a.denominator)
        scale = _lcm(scale, value.b.denominator)
    return _strip({j: (int(value.a * scale), int(value.b * scale)) for j, value in row.items()})


class FractionFreeElimination:
    """Sparse fraction-free elimination state

    Args:
        rows: Integer pair rows
        d: Discriminant
        seed: Tie-breaking seed (None = smallest index wins)
        progress_every: Pivots between progress log lines (0 = silent)
        jordan: Also clear each pivot column from earlier pivot rows
    """

    def __init__(self, rows: Iterable[PairRow], d: int, seed: Optional[int] = None,
                 progress_every: int = DEFAULT_PROGRESS_EVERY, jordan: bool = False):
        self.d = d
        self.jordan = jordan
        self.progress_every = progress_every
        self.rng = np.random.default_rng(seed) if seed is not None else None
        self.rows: Dict[int, PairRow] = {i: dict(row) for i, row in enumerate(rows) if row}
        self.col_rows: Dict[int, Set[int]] = {}
        for i, row in self.rows.items():
            for j in row:
                self.col_rows.setdefault(j, set()).add(i)
        self.pivots: List[Tuple[int, PairRow]] = []

    def _pick(self, candidates: List[int]) -> int:
        if self.rng is None:
            return min(candidates)
        candidates.sort()
        return candidates[int(self.rng.integers(len(candidates)))]

    def _choose(self) -> Tuple[int, int]:
        fewest = min(len(rows) for rows in self.col_rows.values())
        col = self._pick([j for j, rows in self.col_rows.items() if len(rows) == fewest])
        holders = self.col_rows[col]
        shortest = min(len(self.rows[i]) for i in holders)
        row = self._pick([i for i in holders if len(self.rows[i]) == shortest])
        return col, row

    def _combine(self, row: PairRow, col: int, pivot_row: PairRow) -> PairRow:
        d = self.d
        p0, p1 = pivot_row[col]
        r0, r1 = row[col]
        new = {j: (p0 * x + d * p1 * y, p0 * y + p1 * x) for j, (x, y) in row.items()}
        for j, (x, y) in pivot_row.items():
            a, b = new.get(j, (0, 0))
            a -= r0 * x + d * r1 * y
            b -= r0 * y + r1 * x
            if a or b:
                new[j] = (a, b)
            else:
                new.pop(j, None)
        return _strip(new)

    def _update(self, i: int, col: int, pivot_row: PairRow) -> None:
        old = self.rows[i]
        new = self._combine(old, col, pivot_row)
        for j in old.keys() - new.keys():
            holders = self.col_rows[j]
            holders.discard(i)
            if not holders:
                del self.col_rows[j]
        for j in new.keys() - old.keys():
            self.col_rows.setdefault(j, set()).add(i)
        if new:
            self.rows[i] = new
        else:
            del self.rows[i]

    def run(self) -> int:
        """Eliminate until no active row is left

        Returns:
            Rank
        """
        while self.col_rows:
            col, i = self._choose()
            pivot_row = self.rows.pop(i)
            for j in pivot_row:
                holders = self.col_rows[j]
                holders.discard(i)
                if not holders:
                    del self.col_rows[j]
            for k in list(self.col_rows.get(col, ())):
                self._update(k, col, pivot_row)
            if self.jordan:
                for index, (done_col, done_row) in enumerate(self.pivots):
                    if col in done_row:
                        self.pivots[index] = (done_col, self._combine(done_row, col, pivot_row))
            self.pivots.append((col, pivot_row))

            if self.progress_every and len(self.pivots) % self.progress_every == 0:
                logging.info('Exact elimination: %d pivots, %d rows left, %d nonzeros',
                             len(self.pivots), len(self.rows),
                             sum(len(row) for row in self.rows.values()))
        return len(self.pivots)


def exact_rank(rows: Iterable[SparseRow], d: int = 1, seed: Optional[int] = None,
               progress_every: int = DEFAULT_PROGRESS_EVERY) -> int:
    """Exact rank of sparse FieldScalar rows"""
    return FractionFreeElimination((to_pair_row(r) for r in rows), d, seed, progress_every).run()


def vector_rank(vectors: Sequence[KernelVector], d: int = 1, seed: Optional[int] = None) -> int:
    """Exact rank of a list of kernel vectors"""
    return exact_rank((v.entries for v in vectors), d, seed)


def kernel_basis(system: CocycleSystem, seed: Optional[int] = None) -> List[KernelVector]:
    """Exact basis of the solution space

    One vector per free column: that column set to 1, the other free
    columns to 0, pivot columns solved from the reduced rows.
    """
    elimination = FractionFreeElimination((to_pair_row(r) for r in system.rows), system.d,
                                          seed, jordan=True)
    elimination.run()
    pivot_cols = {col for col, _ in elimination.pivots}
    basis = []
    for free in range(system.columns):
        if free in pivot_cols:
            continue
        entries = {free: FieldScalar(1, 0, system.d)}
        for col, row in elimination.pivots:
            value = row.get(free)
            if value is None:
                continue
            pivot = FieldScalar(row[col][0], row[col][1], system.d)
            entries[col] = -FieldScalar(value[0], value[1], system.d) / pivot
        basis.append(KernelVector(system.columns, entries, f'free:{free}'))
    return basis


class ExactEngine(RankEngine):
    """Fraction-free Markowitz elimination engine

    Attributes:
        seed: Pivot tie-breaking seed
        progress_every: Pivots between progress log lines
    """

    kind = EngineKind.EXACT

    def __init__(self, seed: Optional[int] = None, progress_every: int = DEFAULT_PROGRESS_EVERY):
        self.seed = seed
        self.progress_every = progress_every

    def nullity(self, system: CocycleSystem) -> NullityResult:
        rows, cols = system.shape
        logging.info('Exact engine: eliminating %dx%d system with %d nonzeros',
                     rows, cols, system.nonzeros())
        rank = exact_rank(system.rows, system.d, self.seed, self.progress_every)
        logging.info('Exact engine: rank %d, nullity %d', rank, cols - rank)
        return NullityResult(EngineKind.EXACT, rows, cols, rank, cols - rank)
