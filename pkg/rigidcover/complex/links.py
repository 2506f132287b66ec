"""Ascending and descending links

The link of a vertex x_v of C is the boundary complex dual to P, whose
1-skeleton is the facet adjacency graph. The ascending (descending)
link is spanned by the facets with letter O (I) in s_v.
"""

from dataclasses import dataclass
from typing import List, Tuple

import networkx as nx

from rigidcover.complex.colouring import Colouring
from rigidcover.complex.oriented import OrientedComplex
from rigidcover.complex.states import State, StateRule, Vertex, state_at, vertices_of_cube
from rigidcover.polytope import Polytope
from rigidcover.utils.exceptions import LinkConditionError


@dataclass(frozen=True)
class LinkStatus:
    """Link check outcome at one vertex

    Attributes:
        vertex: Vertex of C
        ascending: Ascending link is nonempty and connected
        descending: Descending link is nonempty and connected
    """
    vertex: Vertex
    ascending: bool
    descending: bool

    @property
    def passed(self) -> bool:
        return self.ascending and self.descending


def _spans_connected(graph: nx.Graph, facets) -> bool:
    facets = list(facets)
    if not facets:
        return False
    return nx.is_connected(graph.subgraph(facets))


def link_status(p: Polytope, state: State) -> Tuple[bool, bool]:
    """(ascending ok, descending ok) for a single copy's state"""
    graph = p.adjacency_graph
    return _spans_connected(graph, state.out), _spans_connected(graph, state.inward)


def check_links(cx: OrientedComplex, p: Polytope = None) -> List[LinkStatus]:
    """Check the link condition at every vertex of C

    Args:
        cx: Oriented complex
        p: Polytope (defaults to the complex's polytope)

    Returns:
        One LinkStatus per vertex, in vertex order
    """
    p = p or cx.polytope
    result = []
    for vertex in cx.vertices:
        ascending, descending = link_status(p, cx.states[vertex])
        result.append(LinkStatus(vertex, ascending, descending))
    return result


def require_links(cx: OrientedComplex) -> None:
    """Raise unless every ascending and descending link is nonempty and connected

    Raises:
        LinkConditionError: Names the failing vertices
    """
    failing = [s for s in check_links(cx) if not s.passed]
    if failing:
        described = ', '.join(
            f'{s.vertex} ({"ascending" if not s.ascending else "descending"})' for s in failing
        )
        raise LinkConditionError(f'Link condition fails at {len(failing)} vertices: {described}')


def state_passes_links(p: Polytope, col: Colouring, rule: StateRule, s0: State) -> bool:
    """Check the link condition for all 2^c copies without building C"""
    for vertex in vertices_of_cube(col.c):
        ascending, descending = link_status(p, state_at(s0, rule, col, vertex))
        if not (ascending and descending):
            return False
    return True
