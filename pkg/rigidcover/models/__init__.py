"""Data models module

Defines core enumerations and result types.
"""

from .letter import Letter, RuleVariant
from .cells import SquareClass, CubeTemplate
from .engine import EngineKind, AssemblyMode, Verdict
from .result import CheckResult

__all__ = [
    'Letter',
    'RuleVariant',
    'SquareClass',
    'CubeTemplate',
    'EngineKind',
    'AssemblyMode',
    'Verdict',
    'CheckResult',
]
