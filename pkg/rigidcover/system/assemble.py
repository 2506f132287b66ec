"""Cocycle system assembly

Stacks the tangency block (one per generator) and the relator block
(one per square) into a sparse system over Q(sqrt(d)) whose kernel is
the space of groupoid cocycles.
"""

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import partial
from math import ceil
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from rigidcover.models import AssemblyMode
from rigidcover.numfield import FieldMatrix, LorentzForm, lie_algebra_basis, lie_algebra_dimension
from rigidcover.polytope import Polytope
from rigidcover.system.equations import (
    SparseRow,
    reduced_relator_rows,
    relator_rows,
    tangency_rows,
)
from rigidcover.system.presentation import Presentation, Relator, presentation_of
from rigidcover.utils.executor import map_ordered


@dataclass(frozen=True, eq=False)
class CocycleSystem:
    """Sparse linear system whose kernel is Z^1

    Rows are ordered tangency block first (generator order), then relator
    block (square order), then any constraint rows appended later.

    Attributes:
        n: Ambient dimension
        d: Field discriminant
        presentation: Groupoid presentation the system was built from
        images: Reflection attached to each generator
        mode: Relator assembly mode
        reduced: True if unknowns are Lie algebra coordinates
            (dim G per generator) instead of full matrices ((n+1)^2)
        rows: Sparse rows
        tangency_count: Number of tangency rows
        relator_count: Number of relator rows
        constraint_count: Number of rows appended by with_constraints
    """
    n: int
    d: int
    presentation: Presentation
    images: Tuple[FieldMatrix, ...]
    mode: AssemblyMode
    reduced: bool
    rows: Tuple[SparseRow, ...]
    tangency_count: int
    relator_count: int
    constraint_count: int = 0

    @property
    def size(self) -> int:
        """Side of the unknown matrices"""
        return self.n + 1

    @property
    def dim_g(self) -> int:
        return lie_algebra_dimension(self.n)

    @property
    def block(self) -> int:
        """Columns per generator"""
        return self.dim_g if self.reduced else self.size * self.size

    @property
    def columns(self) -> int:
        return self.block * len(self.presentation.generators)

    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self.rows), self.columns)

    @property
    def vertex_count(self) -> int:
        return len(self.presentation.vertices)

    @property
    def form(self) -> LorentzForm:
        return LorentzForm(self.n, self.d)

    def column(self, generator: int, p: int, q: int) -> int:
        """Column of D_g[p, q] (unreduced systems only)"""
        if self.reduced:
            raise ValueError('Reduced systems have no matrix-entry columns')
        return generator * self.block + p * self.size + q

    def generator_columns(self, generator: int) -> range:
        return range(generator * self.block, (generator + 1) * self.block)

    def nonzeros(self) -> int:
        return sum(len(row) for row in self.rows)

    def to_dense(self) -> np.ndarray:
        """Float mirror: each exact entry embedded once, no arithmetic"""
        dense = np.zeros(self.shape, dtype=float)
        for i, row in enumerate(self.rows):
            for j, value in row.items():
                dense[i, j] = float(value)
        return dense

    def with_constraints(self, rows: Iterable[SparseRow]) -> 'CocycleSystem':
        """Copy of the system with extra rows appended"""
        rows = tuple(rows)
        return replace(self, rows=self.rows + rows,
                       constraint_count=self.constraint_count + len(rows))

    def describe(self) -> str:
        rows, cols = self.shape
        kind = 'reduced' if self.reduced else 'full'
        return f'{rows}x{cols} ({self.mode.value}, {kind})'


def assign_images(source, p: Polytope) -> Tuple[FieldMatrix, ...]:
    """Reflection of each generator's dual facet

    Lifts of the same edge of C share one matrix object.

    Args:
        source: CoverWindow, OrientedComplex or Presentation
        p: Polytope supplying the reflections

    Returns:
        Matrices indexed by generator
    """
    presentation = presentation_of(source)
    return tuple(p.reflection(g.facet) for g in presentation.generators)


def _relator_block(images: Sequence[FieldMatrix], mode: AssemblyMode, form: LorentzForm,
                   basis: Optional[Sequence[FieldMatrix]], relator: Relator) -> List[SparseRow]:
    if basis is None:
        return relator_rows(relator, images, mode, form)
    return reduced_relator_rows(relator, images, mode, form, basis)


def build_system(presentation: Presentation, images: Sequence[FieldMatrix], form: LorentzForm,
                 mode: AssemblyMode = AssemblyMode.SIMPLIFIED, reduced: bool = False,
                 workers: int = 1) -> CocycleSystem:
    """Assemble the cocycle system of a presentation with given images

    Raises:
        ValueError: mode is BOTH
        RelatorShapeError: Simplified mode on a square that does not allow it
    """
    if mode is AssemblyMode.BOTH:
        raise ValueError('Assemble each mode separately; BOTH is a comparison request')
    images = tuple(images)

    tangency: List[SparseRow] = []
    basis = None
    if reduced:
        basis = lie_algebra_basis(form.n, form.d)
    else:
        for g in presentation.generators:
            tangency.extend(tangency_rows(g.index, images[g.index], form))

    blocks = map_ordered(partial(_relator_block, images, mode, form, basis),
                         presentation.relators, workers=workers)
    relators = [row for block in blocks for row in block]

    system = CocycleSystem(
        n=form.n,
        d=form.d,
        presentation=presentation,
        images=images,
        mode=mode,
        reduced=reduced,
        rows=tuple(tangency + relators),
        tangency_count=len(tangency),
        relator_count=len(relators),
    )
    logging.info('Assembled %s system: %d generators, %d relators, %d nonzeros',
                 system.describe(), len(presentation.generators),
                 len(presentation.relators), system.nonzeros())
    return system


def assemble(source, p: Polytope, mode: AssemblyMode = AssemblyMode.SIMPLIFIED,
             reduced: bool = False, workers: int = 1) -> CocycleSystem:
    """Assemble the cocycle system of a window (or of C)

    Args:
        source: CoverWindow, OrientedComplex or Presentation
        p: Polytope supplying the generator images
        mode: GENERIC or SIMPLIFIED relator rows
        reduced: Parametrize each D_g by Lie algebra coordinates
        workers: Worker processes for relator rows

    Returns:
        CocycleSystem with rows (n+1)^2 * (|edges| + |squares|) when not reduced
    """
    presentation = presentation_of(source)
    images = assign_images(presentation, p)
    return build_system(presentation, images, p.form, mode, reduced, workers)


def assemble_base(cx, p: Polytope, mode: AssemblyMode = AssemblyMode.SIMPLIFIED,
                  reduced: bool = False) -> CocycleSystem:
    """Cocycle system of the finite complex C itself"""
    return assemble(cx, p, mode, reduced)


def reduce_tangency(system: CocycleSystem, workers: int = 1) -> CocycleSystem:
    """Solve the tangency block ahead of elimination

    Every D_g is rewritten as sum_k x_(g,k) A_k M_g, which spans the
    tangency solutions exactly, so the nullity is unchanged. Constraint
    rows are not carried over.
    """
    if system.reduced:
        return system
    return build_system(system.presentation, system.images, system.form,
                        system.mode, reduced=True, workers=workers)


def approximate_system_size(n: int, n_facets: int, n_codim2: int, c: int, s: int) -> Tuple[int, int]:
    """Closed-form system size for the window [-1, 2s - 1]

    Each square of C is counted with weight s - 1/2; the exact row count
    uses the actual number of lifted squares instead.

    Returns:
        (rows, columns)
    """
    block = (n + 1) ** 2
    edges = n_facets * 2 ** (c - 1) * s
    squares = n_codim2 * Fraction(2 ** c, 4) * (s - Fraction(1, 2))
    return block * ceil(edges + squares), block * edges
