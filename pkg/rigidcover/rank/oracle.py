"""Groupoid/group consistency oracle

Killing the generators of a spanning tree T turns the groupoid system
into the system of the fundamental group at one base point. The two
kernels differ exactly by the coboundary directions of the other base
points: nullity(groupoid) = nullity(group) + dim(G) * (|V| - 1).
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import networkx as nx
import numpy as np

from rigidcover.numfield import FieldScalar
from rigidcover.rank.engine import RankEngine
from rigidcover.rank.exact import ExactEngine
from rigidcover.system import CocycleSystem, SparseRow
from rigidcover.utils.exceptions import WindowError


@dataclass(frozen=True)
class OracleReport:
    """Outcome of the groupoid/group comparison

    Attributes:
        groupoid_nullity: Nullity of the groupoid system
        group_nullity: Nullity with the tree generators set to zero
        dim_g: n(n+1)/2
        vertex_count: Number of base points
        tree: Generator indices of the spanning tree
    """
    groupoid_nullity: int
    group_nullity: int
    dim_g: int
    vertex_count: int
    tree: List[int]

    @property
    def holds(self) -> bool:
        return self.groupoid_nullity == self.group_nullity + self.dim_g * (self.vertex_count - 1)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'groupoid_nullity': self.groupoid_nullity,
            'group_nullity': self.group_nullity,
            'dimG': self.dim_g,
            'vertex_count': self.vertex_count,
            'tree_size': len(self.tree),
            'holds': self.holds,
        }


def spanning_tree(system: CocycleSystem, seed: Optional[int] = None) -> List[int]:
    """Generator indices of a spanning tree of the presentation's 1-skeleton

    Args:
        system: System carrying the presentation
        seed: Random edge weights (None = first edges win)

    Raises:
        WindowError: The 1-skeleton is disconnected
    """
    presentation = system.presentation
    graph = nx.MultiGraph()
    graph.add_nodes_from(presentation.vertices)
    weights = None
    if seed is not None:
        weights = np.random.default_rng(seed).random(len(presentation.generators))
    for g in presentation.generators:
        weight = 0.0 if weights is None else float(weights[g.index])
        graph.add_edge(g.tail, g.head, key=g.index, weight=weight)
    if graph.number_of_nodes() == 0 or not nx.is_connected(graph):
        raise WindowError('The presentation is disconnected; no spanning tree exists')
    edges = nx.minimum_spanning_edges(graph, algorithm='kruskal', weight='weight',
                                      keys=True, data=False)
    return sorted(key for _, _, key in edges)


def tree_rows(system: CocycleSystem, tree: List[int]) -> List[SparseRow]:
    """Rows forcing D_g = 0 for every tree generator"""
    one = FieldScalar(1, 0, system.d)
    return [{j: one} for g in tree for j in system.generator_columns(g)]


def groupoid_group_oracle(system: CocycleSystem, engine: Optional[RankEngine] = None,
                          seed: Optional[int] = None) -> OracleReport:
    """Compare the groupoid system with its one-base-point restriction

    Args:
        system: Groupoid system of a connected window (or of C)
        engine: Rank engine (default: exact)
        seed: Spanning tree randomization

    Returns:
        OracleReport; check `holds`

    Raises:
        WindowError: The window is disconnected
    """
    engine = engine or ExactEngine()
    tree = spanning_tree(system, seed)
    groupoid = engine.nullity(system).nullity
    group = engine.nullity(system.with_constraints(tree_rows(system, tree))).nullity
    report = OracleReport(groupoid, group, system.dim_g, system.vertex_count, tree)
    logging.info('Oracle: groupoid nullity %d, group nullity %d, dim G %d, %d base points: %s',
                 groupoid, group, system.dim_g, system.vertex_count,
                 'holds' if report.holds else 'FAILS')
    return report
