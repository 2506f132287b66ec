"""Engine, assembly and verdict enumerations"""

from enum import Enum, unique


@unique
class EngineKind(Enum):
    """Rank engine selection"""
    NUMERIC = 'numeric'
    EXACT = 'exact'
    BOTH = 'both'

    @classmethod
    def from_string(cls, value: str) -> 'EngineKind':
        try:
            return cls(value.strip().lower())
        except ValueError:
            valid = ', '.join(v.value for v in cls)
            raise ValueError(f'Invalid engine: {value!r}. Must be one of: {valid}')


@unique
class AssemblyMode(Enum):
    """Relator row assembly

    - GENERIC: differentiate the boundary word letter by letter
    - SIMPLIFIED: use the closed form valid for commuting involutions
    - BOTH: assemble both and check they agree
    """
    GENERIC = 'generic'
    SIMPLIFIED = 'simplified'
    BOTH = 'both'

    @classmethod
    def from_string(cls, value: str) -> 'AssemblyMode':
        try:
            return cls(value.strip().lower())
        except ValueError:
            valid = ', '.join(v.value for v in cls)
            raise ValueError(f'Invalid assembly mode: {value!r}. Must be one of: {valid}')


@unique
class Verdict(Enum):
    """Rigidity verdict

    - RIGID: the H1 bound is zero
    - BOUND_POSITIVE: the H1 bound is positive (no conclusion on rigidity)
    - INCONCLUSIVE: the numeric rank could not be certified
    """
    RIGID = 'Rigid'
    BOUND_POSITIVE = 'BoundPositive'
    INCONCLUSIVE = 'Inconclusive'
