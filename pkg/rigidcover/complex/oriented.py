"""Oriented dual cube complex

Builds the cube complex C dual to the tessellation of the coloured
manifold by 2^c copies of the polytope, orients its edges from the
propagated states and classifies its squares.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Mapping, Tuple

from rigidcover.complex.colouring import Colouring, require_proper_colouring
from rigidcover.complex.states import State, StateRule, Vertex, propagate_states, vertices_of_cube
from rigidcover.models import SquareClass
from rigidcover.polytope import Polytope
from rigidcover.utils.exceptions import CountMismatchError, OrientationError


def weight(vertex: Vertex) -> int:
    return sum(vertex)


def is_even(vertex: Vertex) -> bool:
    return sum(vertex) % 2 == 0


def toggle(vertex: Vertex, axis: int) -> Vertex:
    """vertex + e_axis in (Z/2)^c"""
    return vertex[:axis] + (1 - vertex[axis],) + vertex[axis + 1:]


def strata_count(k_faces: int, n: int, k: int, c: int) -> int:
    """Number of (n-k)-cubes of C dual to the k-faces of the polytope

    Each k-face is glued from 2^(n-k) copies, so the count is
    k_faces * 2^(c-n+k).

    Raises:
        ValueError: The face codimension exceeds c
    """
    codim = n - k
    if codim < 0 or codim > c:
        raise ValueError(f'Codimension {codim} is outside 0..{c}')
    return k_faces * 2 ** (c - codim)


@dataclass(frozen=True)
class Edge:
    """Edge of C dual to a facet shared by P_even and P_odd

    Attributes:
        index: Position in OrientedComplex.edges
        even: Even endpoint (canonical index vertex)
        odd: Odd endpoint, even + e_colour(facet)
        facet: Dual facet id
        outward: True if the edge points from the even endpoint to the odd one
    """
    index: int
    even: Vertex
    odd: Vertex
    facet: int
    outward: bool


@dataclass(frozen=True)
class Square:
    """Square of C dual to a codimension-2 face

    Attributes:
        index: Position in OrientedComplex.squares
        base: Corner with zeros at both colours of the square
        facets: (smaller facet id, larger facet id)
        corners: x0..x3 in boundary order, x0 the smallest odd corner,
            x1 across facets[0], x2 across facets[1], x3 across facets[0]
        edges: Edge indices (x0x1, x1x2, x2x3, x3x0)
        kind: Square class
    """
    index: int
    base: Vertex
    facets: Tuple[int, int]
    corners: Tuple[Vertex, Vertex, Vertex, Vertex]
    edges: Tuple[int, int, int, int]
    kind: SquareClass


def classify_square(states: Mapping[Vertex, State], col: Colouring,
                    base: Vertex, facet: int, other: int) -> SquareClass:
    """Classify the square at `base` dual to the face facet ∩ other

    Compares the orientation of each edge with the opposite edge, both
    read in the direction of increasing coordinate.

    Args:
        states: Vertex states
        col: Colouring
        base: Corner with zeros at both colours
        facet, other: The two facets of the codimension-2 face

    Returns:
        COHERENT if opposite sides agree, BAD for the alternating closed
        pattern, INVALID otherwise
    """
    i, j = col.axis(facet), col.axis(other)
    a0 = states[base].is_out(facet)
    a1 = states[toggle(base, j)].is_out(facet)
    b0 = states[base].is_out(other)
    b1 = states[toggle(base, i)].is_out(other)
    if a0 == a1 and b0 == b1:
        return SquareClass.COHERENT
    if a0 != a1 and b0 != b1 and a0 == b0:
        return SquareClass.BAD
    return SquareClass.INVALID


@dataclass(frozen=True)
class OrientedComplex:
    """Dual cube complex with state-induced edge orientations

    Attributes:
        polytope: Underlying polytope
        colouring: Proper colouring
        rule: State propagation rule
        s0: State of the base copy
        states: Vertex -> propagated state
        vertices: All 2^c vertices in lexicographic order
        edges: Edges indexed by (even vertex, facet), even vertices first
        squares: Squares ordered by codimension-2 face then base vertex
    """
    polytope: Polytope
    colouring: Colouring
    rule: StateRule
    s0: State
    states: Mapping[Vertex, State]
    vertices: Tuple[Vertex, ...]
    edges: Tuple[Edge, ...]
    squares: Tuple[Square, ...]

    @property
    def c(self) -> int:
        return self.colouring.c

    def is_out(self, vertex: Vertex, facet: int) -> bool:
        """Whether the edge dual to `facet` points out of `vertex`"""
        return self.states[vertex].is_out(facet)

    def edge_key(self, vertex: Vertex, facet: int) -> Tuple[Vertex, int]:
        """Canonical (even vertex, facet) key of the edge at `vertex` dual to `facet`"""
        if is_even(vertex):
            return vertex, facet
        return toggle(vertex, self.colouring.axis(facet)), facet

    def edge_at(self, vertex: Vertex, facet: int) -> Edge:
        return self.edges[self.edge_index[self.edge_key(vertex, facet)]]

    @cached_property
    def edge_index(self) -> Dict[Tuple[Vertex, int], int]:
        """(even vertex, facet) -> edge index"""
        return {(e.even, e.facet): e.index for e in self.edges}

    def counts(self) -> Dict[str, int]:
        return {
            'vertices': len(self.vertices),
            'edges': len(self.edges),
            'squares': len(self.squares),
        }

    def square_tally(self) -> Dict[str, int]:
        tally = Counter(sq.kind for sq in self.squares)
        return {kind.value: tally.get(kind, 0) for kind in SquareClass}

    def invalid_squares(self) -> List[Square]:
        return [sq for sq in self.squares if sq.kind is SquareClass.INVALID]


def _square_corners(base: Vertex, first_axis: int, second_axis: int) -> Tuple[Vertex, ...]:
    quad = [base, toggle(base, first_axis), toggle(base, second_axis),
            toggle(toggle(base, first_axis), second_axis)]
    x0 = min(v for v in quad if not is_even(v))
    x1 = toggle(x0, first_axis)
    x2 = toggle(x1, second_axis)
    x3 = toggle(x2, first_axis)
    return (x0, x1, x2, x3)


def build_oriented_complex(p: Polytope, col: Colouring, s0: State,
                           rule: StateRule) -> OrientedComplex:
    """Build the oriented cube complex C

    Args:
        p: Polytope
        col: Proper colouring
        s0: Base state
        rule: Propagation rule

    Returns:
        OrientedComplex with 2^c vertices, n_facets * 2^(c-1) edges and
        n_codim2 * 2^(c-2) squares

    Raises:
        ColouringError: Colouring is not proper
        StateRuleError: Rule does not fit the colouring
        OrientationError: The two endpoint states of an edge disagree
        CountMismatchError: Cell counts differ from the strata formula
    """
    require_proper_colouring(p, col)
    states = propagate_states(s0, rule, col)
    vertices = tuple(vertices_of_cube(col.c))

    edges: List[Edge] = []
    for vertex in vertices:
        if not is_even(vertex):
            continue
        for facet in p.facet_ids:
            odd = toggle(vertex, col.axis(facet))
            outward = states[vertex].is_out(facet)
            if states[odd].is_out(facet) == outward:
                raise OrientationError(
                    f'Edge dual to facet {facet} between {vertex} and {odd} is oriented '
                    f'{"outward" if outward else "inward"} from both endpoints'
                )
            edges.append(Edge(len(edges), vertex, odd, facet, outward))
    edge_index = {(e.even, e.facet): e.index for e in edges}

    squares: List[Square] = []
    for facet, other in p.codim2_faces:
        i, j = col.axis(facet), col.axis(other)
        for base in vertices:
            if base[i] or base[j]:
                continue
            corners = _square_corners(base, i, j)
            keys = []
            for step, (x, y) in enumerate(zip(corners, corners[1:] + corners[:1])):
                crossing = facet if step % 2 == 0 else other
                keys.append(edge_index[(x if is_even(x) else y, crossing)])
            kind = classify_square(states, col, base, facet, other)
            squares.append(Square(len(squares), base, (facet, other), corners, tuple(keys), kind))

    cx = OrientedComplex(p, col, rule, s0, states, vertices, tuple(edges), tuple(squares))

    if col.c >= 2:
        expected = {
            'vertices': strata_count(1, p.n, p.n, col.c),
            'edges': strata_count(p.facet_count, p.n, p.n - 1, col.c),
            'squares': strata_count(len(p.codim2_faces), p.n, p.n - 2, col.c),
        }
        if cx.counts() != expected:
            raise CountMismatchError(f'Complex counts {cx.counts()} differ from {expected}')

    logging.debug('Complex C: %(vertices)d vertices, %(edges)d edges, %(squares)d squares',
                 cx.counts())
    logging.debug('Square classes: %s', cx.square_tally())
    return cx
