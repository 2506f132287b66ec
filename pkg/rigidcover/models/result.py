"""Validation check result dataclass

Represents the outcome of one validation stage.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass
class CheckResult:
    """Validation stage result

    Attributes:
        name: Stage name (e.g. 'colouring', 'links')
        passed: Whether the stage passed
        problems: Offending objects, rendered as strings
        details: Extra data for the report (tallies, counts)
    """
    name: str
    passed: bool
    problems: List[str] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def success(cls, name: str, **details: Any) -> 'CheckResult':
        """Create a passing result

        Args:
            name: Stage name
            **details: Extra report data

        Returns:
            Result object with passed=True
        """
        return cls(name=name, passed=True, details=dict(details))

    @classmethod
    def failure(cls, name: str, problems: List[str], **details: Any) -> 'CheckResult':
        """Create a failing result

        Args:
            name: Stage name
            problems: Offending objects

        Returns:
            Result object with passed=False
        """
        return cls(name=name, passed=False, problems=list(problems), details=dict(details))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'passed': self.passed,
            'problems': list(self.problems),
            'details': dict(self.details),
        }
