"""Higher cubes and quasi-coherence

A k-cube of C is dual to a codimension-k face, i.e. to k pairwise adjacent
facets (right-angled hyperbolic polytopes are flag), together with a base
vertex carrying zeros at the k colours.
"""

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, List, Optional, Tuple

import networkx as nx

from rigidcover.complex.colouring import Colouring
from rigidcover.complex.oriented import OrientedComplex, build_oriented_complex, classify_square, toggle
from rigidcover.complex.states import State, StateRule, Vertex
from rigidcover.models import RuleVariant, SquareClass
from rigidcover.polytope import Polytope
from rigidcover.utils.exceptions import QuasiCoherenceError


@dataclass(frozen=True)
class Cube:
    """k-cube of C

    Attributes:
        base: Vertex with zeros at the cube's colours
        facets: Pairwise adjacent facets spanning the cube (sorted)
    """
    base: Vertex
    facets: Tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.facets)


def enumerate_cubes(cx: OrientedComplex, min_dim: int = 3,
                    max_dim: Optional[int] = None) -> Iterator[Cube]:
    """Yield the cubes of C with min_dim <= dimension <= max_dim

    max_dim defaults to the polytope dimension.
    """
    max_dim = cx.polytope.n if max_dim is None else max_dim
    col = cx.colouring
    for clique in nx.enumerate_all_cliques(cx.polytope.adjacency_graph):
        size = len(clique)
        if size > max_dim:
            break
        if size < min_dim:
            continue
        facets = tuple(sorted(clique))
        axes = [col.axis(f) for f in facets]
        for base in cx.vertices:
            if any(base[a] for a in axes):
                continue
            yield Cube(base, facets)


def cube_faces(cx: OrientedComplex, cube: Cube) -> List[Tuple[Tuple[int, int], SquareClass]]:
    """Classify every square face of a cube

    Returns:
        ((position of first facet, position of second facet), class) per face
    """
    col = cx.colouring
    faces = []
    for a, b in combinations(range(cube.dimension), 2):
        rest = [k for k in range(cube.dimension) if k not in (a, b)]
        for bits in product((0, 1), repeat=len(rest)):
            corner = cube.base
            for k, bit in zip(rest, bits):
                if bit:
                    corner = toggle(corner, col.axis(cube.facets[k]))
            kind = classify_square(cx.states, col, corner, cube.facets[a], cube.facets[b])
            faces.append(((a, b), kind))
    return faces


def is_quasi_coherent(cx: OrientedComplex, cube: Cube) -> bool:
    """A cube is coherent, or a bad square times a coherent cube

    The second case means: all faces parallel to one direction pair are
    bad and every other face is coherent.
    """
    faces = cube_faces(cx, cube)
    bad_directions = {direction for direction, kind in faces if kind is SquareClass.BAD}
    if any(kind is SquareClass.INVALID for _, kind in faces):
        return False
    if not bad_directions:
        return True
    if len(bad_directions) > 1:
        return False
    (direction,) = bad_directions
    return all(kind is SquareClass.BAD for d, kind in faces if d == direction)


def validate_quasi_coherence(cx: OrientedComplex) -> List[Cube]:
    """Find cubes that are not quasi-coherently oriented

    Squares are checked for being coherent or bad; cubes of dimension 3
    up to n are checked against the bad-square-times-coherent-cube shape.

    Returns:
        Offending cubes (empty list = ok). Invalid squares are reported as
        2-dimensional cubes.
    """
    offending = [Cube(sq.base, sq.facets) for sq in cx.invalid_squares()]
    offending.extend(cube for cube in enumerate_cubes(cx) if not is_quasi_coherent(cx, cube))
    return offending


def require_quasi_coherence(cx: OrientedComplex) -> None:
    """Raise unless every square and cube of C is quasi-coherent

    Raises:
        QuasiCoherenceError: Names up to ten offending cubes
    """
    offending = validate_quasi_coherence(cx)
    if offending:
        described = ', '.join(f'{cube.facets}@{cube.base}' for cube in offending[:10])
        raise QuasiCoherenceError(f'{len(offending)} cubes are not quasi-coherent: {described}')


def state_is_quasi_coherent(p: Polytope, col: Colouring, rule: StateRule, s0: State) -> bool:
    """Whether the complex built from a base state is quasi-coherent

    Independent-rule complexes only have coherent squares, so they pass
    without being built.
    """
    if rule.variant is RuleVariant.INDEPENDENT:
        return True
    return not validate_quasi_coherence(build_oriented_complex(p, col, s0, rule))
