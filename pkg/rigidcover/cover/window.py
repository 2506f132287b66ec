"""Finite windows of the infinite cyclic cover

The cover of C is tessellated by lifts (v, t) with |v| + t even; the
window F_[m,n] keeps the lifts with m <= t <= n, every lifted edge with
both endpoints inside and every lifted square whose corners lie inside.
"""

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Tuple

import networkx as nx

from rigidcover.complex import (
    OrientedComplex,
    Vertex,
    is_even,
    require_links,
    require_quasi_coherence,
)
from rigidcover.models import SquareClass
from rigidcover.utils.exceptions import InvalidSquareError, WindowError

LiftedVertex = Tuple[Vertex, int]


@dataclass(frozen=True)
class LiftedEdge:
    """Lift of an edge of C

    Attributes:
        index: Position in CoverWindow.edges
        even: Endpoint of even level (lift of the even vertex of C)
        odd: Endpoint of odd level
        facet: Dual facet id
        base_edge: Index of the edge of C it lifts
    """
    index: int
    even: LiftedVertex
    odd: LiftedVertex
    facet: int
    base_edge: int


@dataclass(frozen=True)
class LiftedSquare:
    """Lift of a square of C

    Attributes:
        index: Position in CoverWindow.squares
        base_square: Index of the square of C it lifts
        corners: x0..x3 in the boundary order of the base square
        edges: Lifted edge indices (x0x1, x1x2, x2x3, x3x0)
        kind: Coherent or bad
        level: Mean corner level (integer for coherent, half-integer for bad)
    """
    index: int
    base_square: int
    corners: Tuple[LiftedVertex, LiftedVertex, LiftedVertex, LiftedVertex]
    edges: Tuple[int, int, int, int]
    kind: SquareClass
    level: Fraction


@dataclass(frozen=True)
class CoverWindow:
    """The window F_[m,n]

    Attributes:
        complex: Oriented complex C
        m, n: Level bounds
        vertices: Lifted vertices ordered by (level, vertex)
        edges: Lifted edges ordered by (even level, even vertex, facet)
        squares: Lifted squares ordered by (base square, level)
    """
    complex: OrientedComplex
    m: int
    n: int
    vertices: Tuple[LiftedVertex, ...]
    edges: Tuple[LiftedEdge, ...]
    squares: Tuple[LiftedSquare, ...]

    def counts(self) -> Dict[str, int]:
        return {
            'vertices': len(self.vertices),
            'edges': len(self.edges),
            'squares': len(self.squares),
        }

    @cached_property
    def vertex_index(self) -> Dict[LiftedVertex, int]:
        return {x: k for k, x in enumerate(self.vertices)}

    def graph(self) -> nx.MultiGraph:
        """1-skeleton with edge indices as keys"""
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for e in self.edges:
            graph.add_edge(e.even, e.odd, key=e.index)
        return graph

    def is_connected(self) -> bool:
        return bool(self.vertices) and nx.is_connected(self.graph())


def level_step(cx: OrientedComplex, vertex: Vertex, facet: int) -> int:
    """Level change when crossing the edge dual to `facet` from `vertex`"""
    return 1 if cx.is_out(vertex, facet) else -1


def _even_levels(m: int, n: int) -> List[int]:
    return [t for t in range(m, n + 1) if t % 2 == 0]


def build_window(cx: OrientedComplex, m: int, n: int) -> CoverWindow:
    """Build F_[m,n]

    Args:
        cx: Quasi-coherent oriented complex whose links are all connected
        m, n: Level bounds with n - m >= 2

    Returns:
        CoverWindow

    Raises:
        WindowError: n - m < 2
        InvalidSquareError: C has squares that admit no level function
        QuasiCoherenceError: Some cube of C is not quasi-coherent
        LinkConditionError: Some ascending or descending link is empty or disconnected
    """
    if n - m < 2:
        raise WindowError(f'Window [{m}, {n}] is too narrow: need n - m >= 2')
    invalid = cx.invalid_squares()
    if invalid:
        described = ', '.join(f'{sq.facets}@{sq.base}' for sq in invalid[:10])
        raise InvalidSquareError(f'{len(invalid)} invalid squares cannot be lifted: {described}')
    require_quasi_coherence(cx)
    require_links(cx)

    vertices = sorted(
        ((v, t) for v in cx.vertices for t in range(m, n + 1) if (sum(v) + t) % 2 == 0),
        key=lambda x: (x[1], x[0]),
    )

    edges: List[LiftedEdge] = []
    edge_index: Dict[Tuple[LiftedVertex, int], int] = {}
    for t in _even_levels(m, n):
        for base_edge in cx.edges:
            odd_level = t + (1 if base_edge.outward else -1)
            if not m <= odd_level <= n:
                continue
            even = (base_edge.even, t)
            lifted = LiftedEdge(len(edges), even, (base_edge.odd, odd_level),
                                base_edge.facet, base_edge.index)
            edge_index[(even, base_edge.facet)] = lifted.index
            edges.append(lifted)

    squares: List[LiftedSquare] = []
    for square in cx.squares:
        offsets = [0]
        for step, corner in enumerate(square.corners):
            crossing = square.facets[step % 2]
            offsets.append(offsets[-1] + level_step(cx, corner, crossing))
        if offsets[-1] != 0:
            raise InvalidSquareError(f'Square {square.facets}@{square.base} does not close up in level')
        offsets = offsets[:4]
        for t0 in range(m - 2, n + 3):
            if t0 % 2 == 0:
                continue
            levels = [t0 + r for r in offsets]
            if not all(m <= t <= n for t in levels):
                continue
            corners = tuple(zip(square.corners, levels))
            keys = []
            for step in range(4):
                x, y = corners[step], corners[(step + 1) % 4]
                even = x if is_even(x[0]) else y
                keys.append(edge_index[(even, square.facets[step % 2])])
            squares.append(LiftedSquare(len(squares), square.index, corners, tuple(keys),
                                        square.kind, Fraction(sum(levels), 4)))

    window = CoverWindow(cx, m, n, tuple(vertices), tuple(edges), tuple(squares))
    logging.info('Window [%d, %d]: %d vertices, %d edges, %d squares',
                 m, n, len(vertices), len(edges), len(squares))
    return window


def build_window_s(cx: OrientedComplex, s: int) -> CoverWindow:
    """Build the window [-1, 2s - 1]

    Raises:
        WindowError: s < 1
    """
    if s < 1:
        raise WindowError(f'Window parameter s must be >= 1, got {s}')
    return build_window(cx, -1, 2 * s - 1)


def monodromy_shift(w: CoverWindow, k: int) -> CoverWindow:
    """Translate every level of the window by 2k

    The deck transformation of the cover maps P_v^t to P_v^(t+2).
    """
    shift = 2 * k

    def move(x: LiftedVertex) -> LiftedVertex:
        return (x[0], x[1] + shift)

    return CoverWindow(
        complex=w.complex,
        m=w.m + shift,
        n=w.n + shift,
        vertices=tuple(move(x) for x in w.vertices),
        edges=tuple(replace(e, even=move(e.even), odd=move(e.odd)) for e in w.edges),
        squares=tuple(
            replace(sq, corners=tuple(move(x) for x in sq.corners), level=sq.level + shift)
            for sq in w.squares
        ),
    )


def expected_counts(n_facets: int, c: int, s: int) -> Dict[str, int]:
    """Vertex and edge counts of [-1, 2s - 1]"""
    return {
        'vertices': 2 ** (c - 1) * (2 * s + 1),
        'edges': n_facets * 2 ** (c - 1) * s,
    }
