"""Built-in right-angled polytopes

Exact data for the ideal octahedron in H^3 and the ideal 24-cell in H^4.
"""

from itertools import product

from rigidcover.numfield import FieldScalar
from rigidcover.polytope.loader import build_polytope
from rigidcover.polytope.models import DeclaredCounts, Facet, Polytope


def octahedron_signs(facet_id: int):
    """Sign vector of an octahedron facet (ids follow product((1, -1), repeat=3))"""
    return list(product((1, -1), repeat=3))[facet_id - 1]


def builtin_octahedron() -> Polytope:
    """Right-angled ideal octahedron

    Normals (s1, s2, s3, -1) with s_i in {1, -1}; two facets are adjacent
    iff their sign vectors differ in exactly one place.

    Returns:
        Polytope with n = 3, d = 1, 8 facets and 12 codimension-2 faces
    """
    facets = [
        Facet(index + 1, tuple(FieldScalar(x) for x in (*signs, -1)))
        for index, signs in enumerate(product((1, -1), repeat=3))
    ]
    return build_polytope(
        'octahedron', 3, 1, facets,
        counts=DeclaredCounts(ideal_vertices=6, real_vertices=0, facets=8),
    )


def builtin_24cell() -> Polytope:
    """Right-angled ideal 24-cell

    Normals (r, 1) for the 24 roots r = ±e_i ± e_j of D4, ordered by the
    support pair (i, j) and then by signs; facets are adjacent iff r·r' = 1.

    Returns:
        Polytope with n = 4, d = 1, 24 facets and 96 codimension-2 faces
    """
    facets = []
    for i in range(4):
        for j in range(i + 1, 4):
            for si, sj in product((1, -1), repeat=2):
                root = [0, 0, 0, 0]
                root[i], root[j] = si, sj
                facets.append(Facet(len(facets) + 1, tuple(FieldScalar(x) for x in (*root, 1))))
    return build_polytope(
        '24-cell', 4, 1, facets,
        counts=DeclaredCounts(ideal_vertices=24, real_vertices=0, facets=24),
    )
