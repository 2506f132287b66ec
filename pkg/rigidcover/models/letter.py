"""Facet letters and state propagation rules

Defines the I/O letters carried by facets and the two ways a state
is propagated from the base polytope to its reflected copies.
"""

from enum import Enum, unique


@unique
class Letter(Enum):
    """Facet status in a state

    - IN: edges dual to the facet point into the polytope copy
    - OUT: edges dual to the facet point out of the polytope copy
    """
    IN = 'I'
    OUT = 'O'

    def swapped(self) -> 'Letter':
        """Return the opposite letter"""
        return Letter.IN if self is Letter.OUT else Letter.OUT

    @classmethod
    def from_string(cls, value: str) -> 'Letter':
        """Parse a letter from 'I' or 'O' (case-insensitive)

        Raises:
            ValueError: Unknown letter
        """
        try:
            return cls(value.strip().upper())
        except ValueError:
            raise ValueError(f"Invalid letter: {value!r}. Must be 'I' or 'O'")


@unique
class RuleVariant(Enum):
    """State propagation rule

    - INDEPENDENT: the letter of F is swapped in copy v iff v has a 1 at colour(F)
    - PAIRED: colours are matched in pairs; the letter of F is swapped iff
      the two coordinates of its pair sum to an odd number
    """
    INDEPENDENT = 'independent'
    PAIRED = 'paired'

    @classmethod
    def from_string(cls, value: str) -> 'RuleVariant':
        """Parse a rule variant name

        Raises:
            ValueError: Unknown variant
        """
        try:
            return cls(value.strip().lower())
        except ValueError:
            valid = ', '.join(v.value for v in cls)
            raise ValueError(f'Invalid rule variant: {value!r}. Must be one of: {valid}')
