"""Polytope data models

Defines the right-angled polytope and its facets.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Mapping, Optional, Tuple

import networkx as nx

from rigidcover.numfield import FieldMatrix, FieldScalar, LorentzForm, reflection_matrix


@dataclass(frozen=True)
class Facet:
    """Polytope facet

    Attributes:
        id: Facet identifier (positive integer, unique per polytope)
        normal: Spacelike normal vector of length n + 1
    """
    id: int
    normal: Tuple[FieldScalar, ...]


@dataclass(frozen=True)
class DeclaredCounts:
    """Combinatorial counts declared by a polytope file

    Attributes:
        ideal_vertices: Number of ideal vertices
        real_vertices: Number of finite vertices
        facets: Number of facets
    """
    ideal_vertices: int
    real_vertices: int
    facets: int


@dataclass(frozen=True)
class Polytope:
    """Right-angled polytope in hyperbolic n-space

    Built by rigidcover.polytope.loader.build_polytope, which computes and
    validates adjacency and codimension-2 faces.

    Attributes:
        name: Polytope name
        n: Dimension of the ambient hyperbolic space
        d: Field discriminant of the normals
        facets: Facets in file order
        adjacency: Facet id -> ids of adjacent facets
        codim2_faces: Codimension-2 faces as sorted facet-id pairs
        declared_counts: Counts declared by the input file, if any
    """
    name: str
    n: int
    d: int
    facets: Tuple[Facet, ...]
    adjacency: Mapping[int, FrozenSet[int]] = field(repr=False)
    codim2_faces: Tuple[Tuple[int, int], ...] = field(repr=False)
    declared_counts: Optional[DeclaredCounts] = None

    @property
    def form(self) -> LorentzForm:
        return LorentzForm(self.n, self.d)

    @property
    def facet_ids(self) -> Tuple[int, ...]:
        return tuple(f.id for f in self.facets)

    @property
    def facet_count(self) -> int:
        return len(self.facets)

    @cached_property
    def _facets_by_id(self) -> Dict[int, Facet]:
        return {f.id: f for f in self.facets}

    def facet(self, facet_id: int) -> Facet:
        return self._facets_by_id[facet_id]

    def normal(self, facet_id: int) -> Tuple[FieldScalar, ...]:
        return self._facets_by_id[facet_id].normal

    def are_adjacent(self, first: int, second: int) -> bool:
        return second in self.adjacency.get(first, frozenset())

    def neighbours(self, facet_id: int) -> FrozenSet[int]:
        return self.adjacency[facet_id]

    @cached_property
    def reflections(self) -> Dict[int, FieldMatrix]:
        """Facet id -> reflection matrix in the facet's wall"""
        return {f.id: reflection_matrix(f.normal, self.form) for f in self.facets}

    def reflection(self, facet_id: int) -> FieldMatrix:
        return self.reflections[facet_id]

    @cached_property
    def adjacency_graph(self) -> nx.Graph:
        """Facet adjacency graph (nodes are facet ids)"""
        graph = nx.Graph()
        graph.add_nodes_from(self.facet_ids)
        graph.add_edges_from((i, j) for i, others in self.adjacency.items()
                             for j in others if i < j)
        return graph

    def adjacent_pairs(self) -> Tuple[Tuple[int, int], ...]:
        """Sorted adjacent facet pairs (i < j)"""
        return tuple(sorted((i, j) for i, others in self.adjacency.items()
                            for j in others if i < j))
