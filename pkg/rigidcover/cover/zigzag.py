"""Zigzag connectivity check

For an abstract cube with vertex levels given by a template and an
offset, the subcomplex E spanned by the edges with both endpoints at
levels -1, 0, 1 must be connected and contain every level-0 vertex.
"""

from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Tuple

import networkx as nx

from rigidcover.models import CubeTemplate
from rigidcover.utils.constants import ZIGZAG_LEVELS, ZIGZAG_MAX_DIM, ZIGZAG_MIN_DIM

Corner = Tuple[int, ...]


@dataclass(frozen=True)
class ZigzagResult:
    """Outcome of one (dimension, template, offset) case"""
    dim: int
    template: CubeTemplate
    offset: int
    connected: bool

    def to_dict(self) -> Dict[str, object]:
        return {
            'dim': self.dim,
            'template': self.template.value,
            'offset': self.offset,
            'connected': self.connected,
        }


def _check_dim(dim: int) -> None:
    if not ZIGZAG_MIN_DIM <= dim <= ZIGZAG_MAX_DIM:
        raise ValueError(
            f'Cube dimension must be in {ZIGZAG_MIN_DIM}..{ZIGZAG_MAX_DIM}, got {dim}'
        )


def base_level(corner: Corner, template: CubeTemplate) -> int:
    """Level of a corner before the offset is added

    A coherent cube counts its 1-coordinates. A bad square times a
    coherent cube gives the first two coordinates the levels 0, 1, 1, 0
    at 00, 10, 01, 11.
    """
    if template is CubeTemplate.COHERENT:
        return sum(corner)
    return (corner[0] ^ corner[1]) + sum(corner[2:])


def offsets_for(dim: int, template: CubeTemplate) -> List[int]:
    """Offsets that put level 0 in the image of the cube"""
    top = dim if template is CubeTemplate.COHERENT else dim - 1
    return list(range(-top, 1))


def zigzag_subcomplex(dim: int, template: CubeTemplate, offset: int) -> Tuple[nx.Graph, List[Corner]]:
    """Build E and list the level-0 corners"""
    levels = {corner: base_level(corner, template) + offset
              for corner in product((0, 1), repeat=dim)}
    graph = nx.Graph()
    for corner, level in levels.items():
        if level not in ZIGZAG_LEVELS:
            continue
        for axis in range(dim):
            if corner[axis]:
                continue
            neighbour = corner[:axis] + (1,) + corner[axis + 1:]
            if levels[neighbour] in ZIGZAG_LEVELS:
                graph.add_edge(corner, neighbour)
    zero = [corner for corner, level in levels.items() if level == 0]
    return graph, zero


def check_zigzag_offset(dim: int, template: CubeTemplate, offset: int) -> bool:
    graph, zero = zigzag_subcomplex(dim, template, offset)
    if graph.number_of_nodes() == 0 or not nx.is_connected(graph):
        return False
    return all(corner in graph for corner in zero)


def check_zigzag(dim: int, template: CubeTemplate) -> bool:
    """Check E for every offset placing 0 in the level image

    Args:
        dim: Cube dimension, 2..9
        template: Level template

    Returns:
        True if E is connected and holds all level-0 corners for every offset

    Raises:
        ValueError: dim out of range
    """
    _check_dim(dim)
    return all(check_zigzag_offset(dim, template, offset) for offset in offsets_for(dim, template))


def zigzag_table(max_dim: int) -> List[ZigzagResult]:
    """Results for every dimension 2..max_dim, template and offset

    Raises:
        ValueError: max_dim out of range
    """
    _check_dim(max_dim)
    results = []
    for dim in range(ZIGZAG_MIN_DIM, max_dim + 1):
        for template in CubeTemplate:
            for offset in offsets_for(dim, template):
                results.append(ZigzagResult(dim, template, offset,
                                            check_zigzag_offset(dim, template, offset)))
    return results
