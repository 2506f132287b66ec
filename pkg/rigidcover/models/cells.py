"""Cell classification enumerations

Square classes of an oriented cube complex and the cube templates
used by the zigzag connectivity check.
"""

from enum import Enum, unique


@unique
class SquareClass(Enum):
    """Orientation pattern of a square

    - COHERENT: opposite sides carry the same orientation
    - BAD: both opposite pairs disagree, boundary still closes up in level
    - INVALID: the boundary winds, no level function exists
    """
    COHERENT = 'coherent'
    BAD = 'bad'
    INVALID = 'invalid'


@unique
class CubeTemplate(Enum):
    """Level pattern of an abstract cube in the zigzag check"""
    COHERENT = 'coherent'
    BAD_TIMES_COHERENT = 'bad-times-coherent'
