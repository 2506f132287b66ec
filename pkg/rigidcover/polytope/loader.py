"""Polytope loader

Load polytope files and compute facet adjacency and codimension-2 faces.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from rigidcover.numfield import FieldScalar, LorentzForm, lorentz_product
from rigidcover.polytope.models import DeclaredCounts, Facet, Polytope
from rigidcover.utils.exceptions import (
    AdjacencyMismatchError,
    CountMismatchError,
    FieldError,
    PolytopeFormatError,
    ValidationError,
)


def _adjacency_from_normals(facets: Sequence[Facet],
                            form: LorentzForm) -> Dict[int, FrozenSet[int]]:
    neighbours: Dict[int, set] = {f.id: set() for f in facets}
    for index, first in enumerate(facets):
        for second in facets[index + 1:]:
            if lorentz_product(first.normal, second.normal, form).is_zero():
                neighbours[first.id].add(second.id)
                neighbours[second.id].add(first.id)
    return {fid: frozenset(others) for fid, others in neighbours.items()}


def compute_adjacency(p: Polytope) -> Dict[int, FrozenSet[int]]:
    """Recompute facet adjacency from the normals

    Facets i != j are adjacent iff their normals are Lorentz-orthogonal.

    Args:
        p: Polytope

    Returns:
        Facet id -> ids of adjacent facets
    """
    return _adjacency_from_normals(p.facets, p.form)


def enumerate_codim2(p: Polytope) -> List[Tuple[int, int]]:
    """List codimension-2 faces, one per adjacent facet pair

    Args:
        p: Polytope with adjacency computed

    Returns:
        Sorted list of (i, j) pairs with i < j
    """
    return list(p.adjacent_pairs())


def check_commuting_reflections(p: Polytope) -> None:
    """Assert that reflections in adjacent walls commute exactly

    Raises:
        ValidationError: Some adjacent pair does not commute
    """
    for i, j in p.adjacent_pairs():
        mi, mj = p.reflection(i), p.reflection(j)
        if mi @ mj != mj @ mi:
            raise ValidationError(f'Reflections of adjacent facets {i} and {j} do not commute')


def _pairs(value: Iterable[Any], what: str) -> List[Tuple[int, int]]:
    pairs = []
    for item in value:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise PolytopeFormatError(f'{what} entries must be pairs of facet ids, got {item!r}')
        i, j = int(item[0]), int(item[1])
        if i == j:
            raise PolytopeFormatError(f'{what} pair ({i}, {j}) repeats a facet')
        pairs.append((min(i, j), max(i, j)))
    return sorted(set(pairs))


def build_polytope(name: str, n: int, d: int, facets: Sequence[Facet],
                   adjacency: Optional[Iterable[Tuple[int, int]]] = None,
                   codim2: Optional[Iterable[Tuple[int, int]]] = None,
                   counts: Optional[DeclaredCounts] = None) -> Polytope:
    """Validate facet data and assemble a Polytope

    Args:
        name: Polytope name
        n: Ambient dimension
        d: Field discriminant
        facets: Facets with exact normals
        adjacency: Declared adjacent pairs (checked against the normals)
        codim2: Explicit codimension-2 face list (overrides one face per adjacent pair)
        counts: Declared counts (facet count is checked)

    Returns:
        Validated Polytope

    Raises:
        PolytopeFormatError: Duplicate ids or wrong normal lengths
        FieldError: Non-spacelike normal or discriminant mismatch
        AdjacencyMismatchError: Declared adjacency or codim-2 list disagrees with normals
        CountMismatchError: Declared facet count differs
    """
    form = LorentzForm(n, d)
    seen = set()
    for facet in facets:
        if facet.id in seen:
            raise PolytopeFormatError(f'Duplicated facet id: {facet.id}')
        seen.add(facet.id)
        if len(facet.normal) != n + 1:
            raise PolytopeFormatError(
                f'Facet {facet.id} normal has {len(facet.normal)} entries, expected {n + 1}'
            )
        for x in facet.normal:
            if x.d not in (1, d):
                raise FieldError(f'Facet {facet.id} normal lives in Q(sqrt({x.d})), not Q(sqrt({d}))')
        if lorentz_product(facet.normal, facet.normal, form).sign() <= 0:
            raise FieldError(f'Facet {facet.id} normal is not spacelike')

    computed = _adjacency_from_normals(facets, form)
    computed_pairs = sorted((i, j) for i, others in computed.items() for j in others if i < j)

    if adjacency is not None:
        declared_pairs = _pairs(adjacency, 'adjacency')
        if declared_pairs != computed_pairs:
            missing = sorted(set(computed_pairs) - set(declared_pairs))
            extra = sorted(set(declared_pairs) - set(computed_pairs))
            raise AdjacencyMismatchError(
                f'Declared adjacency differs from normals: missing {missing}, extra {extra}'
            )

    if codim2 is not None:
        faces = _pairs(codim2, 'codim2')
        not_adjacent = [pair for pair in faces if pair not in set(computed_pairs)]
        if not_adjacent:
            raise AdjacencyMismatchError(f'codim2 faces on non-adjacent facets: {not_adjacent}')
    else:
        faces = computed_pairs

    if counts is not None and counts.facets != len(facets):
        raise CountMismatchError(
            f'Declared facet count {counts.facets} differs from {len(facets)} facets'
        )

    polytope = Polytope(
        name=name,
        n=n,
        d=d,
        facets=tuple(facets),
        adjacency=computed,
        codim2_faces=tuple(faces),
        declared_counts=counts,
    )
    check_commuting_reflections(polytope)
    logging.debug('Polytope %s: %d facets, %d codim-2 faces',
                  name, polytope.facet_count, len(faces))
    return polytope


def parse_scalar(value: Any, d: int) -> FieldScalar:
    """Parse a normal entry

    Accepted forms: an integer, [num, den], or [num, den, b_num, b_den]
    standing for num/den + (b_num/b_den) sqrt(d).

    Raises:
        PolytopeFormatError: Malformed entry
    """
    try:
        if isinstance(value, bool):
            raise ValueError
        if isinstance(value, int):
            return FieldScalar(value, 0, d)
        if isinstance(value, (list, tuple)):
            parts = [int(x) for x in value]
            if len(parts) == 2:
                return FieldScalar.from_parts(parts[0], parts[1], 0, 1, d)
            if len(parts) == 4:
                return FieldScalar.from_parts(parts[0], parts[1], parts[2], parts[3], d)
    except (TypeError, ValueError, ZeroDivisionError):
        pass
    raise PolytopeFormatError(f'Malformed normal entry: {value!r}')


def polytope_from_dict(data: Dict[str, Any]) -> Polytope:
    """Build a polytope from its JSON document

    Raises:
        PolytopeFormatError: Missing or malformed fields
    """
    try:
        name = str(data.get('name', 'polytope'))
        n = int(data['dimension'])
        d = int(data.get('discriminant', 1))
        raw_facets = data['facets']
    except (KeyError, TypeError, ValueError) as e:
        raise PolytopeFormatError(f'Missing or malformed polytope field: {e}')

    if n < 2:
        raise PolytopeFormatError(f'Polytope dimension must be >= 2, got {n}')
    if not isinstance(raw_facets, list) or not raw_facets:
        raise PolytopeFormatError('Polytope needs a non-empty facets list')

    facets = []
    for raw in raw_facets:
        try:
            facet_id = int(raw['id'])
            entries = raw['normal']
        except (KeyError, TypeError, ValueError) as e:
            raise PolytopeFormatError(f'Malformed facet {raw!r}: {e}')
        if facet_id < 1:
            raise PolytopeFormatError(f'Facet ids must be positive, got {facet_id}')
        if not isinstance(entries, list):
            raise PolytopeFormatError(f'Facet {facet_id} normal must be a list')
        facets.append(Facet(facet_id, tuple(parse_scalar(x, d) for x in entries)))

    counts = None
    if 'counts' in data:
        try:
            raw_counts = data['counts']
            counts = DeclaredCounts(
                ideal_vertices=int(raw_counts.get('ideal_vertices', 0)),
                real_vertices=int(raw_counts.get('real_vertices', 0)),
                facets=int(raw_counts['facets']),
            )
        except (KeyError, TypeError, ValueError, AttributeError) as e:
            raise PolytopeFormatError(f'Malformed counts: {e}')

    try:
        return build_polytope(
            name, n, d, facets,
            adjacency=data.get('adjacency'),
            codim2=data.get('codim2'),
            counts=counts,
        )
    except (TypeError, ValueError) as e:
        raise PolytopeFormatError(f'Malformed polytope data: {e}')


def load_polytope(path: Path) -> Polytope:
    """Load and validate a polytope file

    Args:
        path: JSON polytope file

    Returns:
        Validated Polytope

    Raises:
        PolytopeFormatError: File missing, not JSON, or malformed
        FieldError, AdjacencyMismatchError, CountMismatchError: see build_polytope
    """
    path = Path(path)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except OSError as e:
        raise PolytopeFormatError(f'Cannot read polytope file {path}: {e}')
    except json.JSONDecodeError as e:
        raise PolytopeFormatError(f'Polytope file {path} is not valid JSON: {e}')
    if not isinstance(data, dict):
        raise PolytopeFormatError(f'Polytope file {path} must contain a JSON object')
    logging.info('Loading polytope from %s', path)
    return polytope_from_dict(data)
