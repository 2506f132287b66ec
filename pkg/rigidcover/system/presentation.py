"""Groupoid presentations of cube complexes

Vertices are the base points, generators are the edges oriented from the
even-level endpoint to the odd-level one, relators are the square
boundaries. Both C and every window F_[m,n] present their fundamental
groupoid this way.
"""

from dataclasses import dataclass
from typing import Hashable, Tuple

from rigidcover.complex import OrientedComplex
from rigidcover.cover import CoverWindow


@dataclass(frozen=True)
class Generator:
    """Oriented edge used as a groupoid generator

    Attributes:
        index: Generator index
        tail: Even-level endpoint
        head: Odd-level endpoint
        facet: Dual facet (its reflection is the generator's image)
    """
    index: int
    tail: Hashable
    head: Hashable
    facet: int


@dataclass(frozen=True)
class Relator:
    """Square boundary word

    Attributes:
        square: Index of the square in its complex
        letters: (generator index, +1 or -1) in product order
    """
    square: int
    letters: Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class Presentation:
    """Finite groupoid presentation

    Attributes:
        vertices: Base points
        generators: Oriented edges
        relators: Square words
    """
    vertices: Tuple[Hashable, ...]
    generators: Tuple[Generator, ...]
    relators: Tuple[Relator, ...]


def square_word(index: int, edges: Tuple[int, int, int, int]) -> Relator:
    """Relator of a square traversed x0 -> x1 -> x2 -> x3 -> x0 with x0 odd

    Generators point from even to odd corners, so the path crosses
    x0x1 and x2x3 backwards. Written as a product (rightmost letter
    first along the path) the word is e30 * e23^-1 * e12 * e01^-1.
    """
    e01, e12, e23, e30 = edges
    return Relator(index, ((e30, 1), (e23, -1), (e12, 1), (e01, -1)))


def presentation_of_complex(cx: OrientedComplex) -> Presentation:
    """Presentation of pi_1(C, V) with every vertex of C as base point"""
    generators = tuple(Generator(e.index, e.even, e.odd, e.facet) for e in cx.edges)
    relators = tuple(square_word(sq.index, sq.edges) for sq in cx.squares)
    return Presentation(cx.vertices, generators, relators)


def presentation_of_window(w: CoverWindow) -> Presentation:
    """Presentation of pi_1(F_[m,n], V') with every window vertex as base point"""
    generators = tuple(Generator(e.index, e.even, e.odd, e.facet) for e in w.edges)
    relators = tuple(square_word(sq.index, sq.edges) for sq in w.squares)
    return Presentation(w.vertices, generators, relators)


def presentation_of(source) -> Presentation:
    """Presentation of an OrientedComplex, a CoverWindow or a Presentation"""
    if isinstance(source, Presentation):
        return source
    if isinstance(source, CoverWindow):
        return presentation_of_window(source)
    if isinstance(source, OrientedComplex):
        return presentation_of_complex(source)
    raise TypeError(f'Cannot build a presentation from {type(source).__name__}')
