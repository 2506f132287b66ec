"""Facet states and their propagation to reflected copies

A state assigns I or O to every facet. The state of the base copy is
propagated to all 2^c copies by one of two rules.
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from rigidcover.complex.colouring import Colouring
from rigidcover.models import Letter, RuleVariant
from rigidcover.utils.exceptions import StateFormatError, StateRuleError

Vertex = Tuple[int, ...]


@dataclass(frozen=True)
class State:
    """Assignment of I/O letters to facets

    Attributes:
        facets: All facet ids, in polytope order
        out: Facets carrying the letter O
    """
    facets: Tuple[int, ...]
    out: FrozenSet[int]

    def letter(self, facet_id: int) -> Letter:
        return Letter.OUT if facet_id in self.out else Letter.IN

    def is_out(self, facet_id: int) -> bool:
        return facet_id in self.out

    @property
    def inward(self) -> FrozenSet[int]:
        return frozenset(self.facets) - self.out

    def flipped(self, facets: Iterable[int]) -> 'State':
        """Swap the letters of the given facets"""
        return State(self.facets, self.out.symmetric_difference(facets))

    def swapped(self) -> 'State':
        """Swap every letter (I <-> O)"""
        return State(self.facets, self.inward)

    def permuted(self, permutation: Mapping[int, int]) -> 'State':
        """Image of the state under a facet permutation"""
        return State(self.facets, frozenset(permutation[f] for f in self.out))

    def encode(self) -> str:
        """Letters in facet order, e.g. 'OOIOIIIO'"""
        return ''.join(self.letter(f).value for f in self.facets)

    @classmethod
    def from_letters(cls, letters: Mapping[int, Letter],
                     facets: Optional[Sequence[int]] = None) -> 'State':
        facets = tuple(facets) if facets is not None else tuple(sorted(letters))
        return cls(facets, frozenset(f for f in facets if letters[f] is Letter.OUT))

    @classmethod
    def decode(cls, word: str, facets: Sequence[int]) -> 'State':
        """Inverse of encode

        Raises:
            StateFormatError: Word length or letters are wrong
        """
        if len(word) != len(facets):
            raise StateFormatError(f'State word {word!r} has {len(word)} letters, expected {len(facets)}')
        try:
            letters = {f: Letter.from_string(ch) for f, ch in zip(facets, word)}
        except ValueError as e:
            raise StateFormatError(str(e))
        return cls.from_letters(letters, facets)


@dataclass(frozen=True)
class StateRule:
    """State propagation rule

    Attributes:
        variant: Independent or Paired
        pairing: Perfect matching on colours (Paired only)
    """
    variant: RuleVariant = RuleVariant.INDEPENDENT
    pairing: Tuple[Tuple[int, int], ...] = field(default_factory=tuple)

    def validate(self, c: int) -> None:
        """Check the rule against the number of colours

        Raises:
            StateRuleError: Paired rule with odd c or a pairing that is not a partition
        """
        if self.variant is RuleVariant.INDEPENDENT:
            if self.pairing:
                raise StateRuleError('Independent rule does not take a pairing')
            return
        if c % 2:
            raise StateRuleError(f'Paired rule needs an even number of colours, got {c}')
        covered = [k for pair in self.pairing for k in pair]
        if sorted(covered) != list(range(1, c + 1)):
            raise StateRuleError(
                f'Pairing {list(self.pairing)} is not a partition of colours 1..{c} into pairs'
            )

    def partner(self, colour: int) -> int:
        for i, j in self.pairing:
            if colour == i:
                return j
            if colour == j:
                return i
        raise StateRuleError(f'Colour {colour} is not paired')

    def flips(self, vertex: Vertex, facet_colour: int) -> bool:
        """Whether a facet of the given colour is flipped in copy `vertex`"""
        if self.variant is RuleVariant.INDEPENDENT:
            return vertex[facet_colour - 1] == 1
        other = self.partner(facet_colour)
        return (vertex[facet_colour - 1] + vertex[other - 1]) % 2 == 1


def vertices_of_cube(c: int) -> List[Vertex]:
    """All v in (Z/2)^c in lexicographic order"""
    return list(product((0, 1), repeat=c))


def state_at(s0: State, rule: StateRule, col: Colouring, vertex: Vertex) -> State:
    """State of the copy P_v"""
    return s0.flipped(f for f in s0.facets if rule.flips(vertex, col.colour(f)))


def propagate_states(s0: State, rule: StateRule, col: Colouring) -> Dict[Vertex, State]:
    """Propagate the base state to all 2^c copies

    Args:
        s0: State of the base copy
        rule: Propagation rule
        col: Proper colouring

    Returns:
        Vertex -> state

    Raises:
        StateRuleError: Rule does not fit the colouring
    """
    rule.validate(col.c)
    return {v: state_at(s0, rule, col, v) for v in vertices_of_cube(col.c)}


def parse_state(text: str, facets: Sequence[int],
                source: str = '<string>') -> Tuple[State, StateRule]:
    """Parse a state file

    Lines are 'facet I|O', 'rule independent|paired' or 'pairing i j';
    '#' starts a comment.

    Returns:
        (state, rule)

    Raises:
        StateFormatError: Malformed line, unknown facet or missing letters
    """
    letters: Dict[int, Letter] = {}
    variant = RuleVariant.INDEPENDENT
    pairing: List[Tuple[int, int]] = []
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        key = parts[0].lower()
        try:
            if key == 'rule' and len(parts) == 2:
                variant = RuleVariant.from_string(parts[1])
            elif key == 'pairing' and len(parts) == 3:
                pairing.append((int(parts[1]), int(parts[2])))
            elif len(parts) == 2:
                facet_id = int(parts[0])
                if facet_id in letters:
                    raise StateFormatError(f'{source}:{number}: facet {facet_id} listed twice')
                letters[facet_id] = Letter.from_string(parts[1])
            else:
                raise ValueError(f'unrecognised line {raw!r}')
        except ValueError as e:
            raise StateFormatError(f'{source}:{number}: {e}')

    unknown = sorted(set(letters) - set(facets))
    if unknown:
        raise StateFormatError(f'{source}: unknown facets {unknown}')
    missing = [f for f in facets if f not in letters]
    if missing:
        raise StateFormatError(f'{source}: facets without a letter: {missing}')
    return State.from_letters(letters, facets), StateRule(variant, tuple(pairing))


def load_state(path: Path, facets: Sequence[int]) -> Tuple[State, StateRule]:
    """Load a state file for a polytope with the given facet ids

    Raises:
        StateFormatError: File missing or malformed
    """
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise StateFormatError(f'Cannot read state file {path}: {e}')
    logging.info('Loading state from %s', path)
    return parse_state(text, facets, str(path))


def format_state(state: State, rule: StateRule) -> str:
    """Render a state in the state file format"""
    lines = [f'rule {rule.variant.value}']
    lines.extend(f'pairing {i} {j}' for i, j in rule.pairing)
    lines.extend(f'{f} {state.letter(f).value}' for f in state.facets)
    return '\n'.join(lines) + '\n'
