"""Facet colourings

A colouring assigns colours 1..c to facets so that adjacent facets differ.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Mapping, Tuple

from rigidcover.polytope import Polytope
from rigidcover.utils.exceptions import ColouringError, ColouringFormatError


@dataclass(frozen=True)
class Colouring:
    """Facet colouring

    Attributes:
        c: Number of colours (every colour 1..c is used)
        colours: Facet id -> colour
    """
    c: int
    colours: Mapping[int, int]

    def colour(self, facet_id: int) -> int:
        return self.colours[facet_id]

    def axis(self, facet_id: int) -> int:
        """Zero-based coordinate index of the facet's colour"""
        return self.colours[facet_id] - 1

    def facets_of(self, colour: int) -> List[int]:
        return sorted(f for f, k in self.colours.items() if k == colour)

    @classmethod
    def from_mapping(cls, colours: Mapping[int, int]) -> 'Colouring':
        """Build a colouring, taking c as the largest colour

        Raises:
            ColouringFormatError: Colours are not exactly 1..c
        """
        if not colours:
            raise ColouringFormatError('Colouring is empty')
        used = set(colours.values())
        c = max(used)
        if min(used) < 1 or used != set(range(1, c + 1)):
            raise ColouringFormatError(
                f'Colours must be exactly 1..{c}, got {sorted(used)}'
            )
        return cls(c=c, colours=dict(colours))


def validate_colouring(p: Polytope, col: Colouring) -> List[Tuple[int, int]]:
    """List adjacent facet pairs sharing a colour

    Args:
        p: Polytope
        col: Colouring

    Returns:
        Offending (i, j) pairs, empty when the colouring is proper

    Raises:
        ColouringError: Some facet has no colour
    """
    missing = [f for f in p.facet_ids if f not in col.colours]
    if missing:
        raise ColouringError(f'Facets without a colour: {missing}')
    unknown = sorted(set(col.colours) - set(p.facet_ids))
    if unknown:
        raise ColouringError(f'Colouring names unknown facets: {unknown}')
    return [(i, j) for i, j in p.adjacent_pairs() if col.colour(i) == col.colour(j)]


def require_proper_colouring(p: Polytope, col: Colouring) -> None:
    """Raise unless the colouring is proper

    Raises:
        ColouringError: Some adjacent facets share a colour
    """
    violations = validate_colouring(p, col)
    if violations:
        raise ColouringError(
            f'{len(violations)} adjacent facet pairs share a colour: {violations}'
        )


def parse_colouring(text: str, source: str = '<string>') -> Colouring:
    """Parse 'facet colour' lines ('#' starts a comment)

    Raises:
        ColouringFormatError: Malformed line or duplicate facet
    """
    colours: Dict[int, int] = {}
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ColouringFormatError(f'{source}:{number}: expected "facet colour", got {raw!r}')
        try:
            facet_id, colour = int(parts[0]), int(parts[1])
        except ValueError:
            raise ColouringFormatError(f'{source}:{number}: non-integer entry in {raw!r}')
        if facet_id in colours:
            raise ColouringFormatError(f'{source}:{number}: facet {facet_id} coloured twice')
        colours[facet_id] = colour
    return Colouring.from_mapping(colours)


def load_colouring(path: Path) -> Colouring:
    """Load a colouring file

    Raises:
        ColouringFormatError: File missing or malformed
    """
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise ColouringFormatError(f'Cannot read colouring file {path}: {e}')
    logging.info('Loading colouring from %s', path)
    return parse_colouring(text, str(path))
