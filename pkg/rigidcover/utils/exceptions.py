"""Custom exception classes

Defines all exception types used in the project.
"""


class RigidityError(Exception):
    """Pipeline error base class"""
    pass


class ConfigurationError(RigidityError):
    """Configuration error or missing"""
    pass


class InputError(RigidityError):
    """Input file could not be read or parsed"""
    pass


class PolytopeFormatError(InputError):
    """Polytope file is malformed"""
    pass


class ColouringFormatError(InputError):
    """Colouring file is malformed"""
    pass


class StateFormatError(InputError):
    """State file is malformed"""
    pass


class FieldError(RigidityError):
    """Exact arithmetic precondition violated (discriminant mismatch, bad normal)"""
    pass


class ValidationError(RigidityError):
    """Input data is well-formed but mathematically invalid"""
    pass


class AdjacencyMismatchError(ValidationError):
    """Declared adjacency differs from the one computed from normals"""
    pass


class CountMismatchError(ValidationError):
    """Computed combinatorial counts differ from declared or expected counts"""
    pass


class ColouringError(ValidationError):
    """Colouring is incomplete or not proper"""
    pass


class StateRuleError(ValidationError):
    """State propagation rule cannot be applied"""
    pass


class OrientationError(ValidationError):
    """Edge orientations read from two endpoint states disagree"""
    pass


class InvalidSquareError(ValidationError):
    """A square is neither coherent nor bad"""
    pass


class LinkConditionError(ValidationError):
    """Some ascending or descending link is empty or disconnected"""
    pass


class QuasiCoherenceError(ValidationError):
    """Some cube is not quasi-coherently oriented"""
    pass


class WindowError(ValidationError):
    """Window bounds or window topology are unusable"""
    pass


class RelatorShapeError(ValidationError):
    """Relator images do not allow the simplified square equation"""
    pass


class EngineError(RigidityError):
    """Rank engine failure"""
    pass


class SizeCapError(EngineError):
    """System exceeds the dense numeric size cap"""
    pass


class EngineDisagreementError(EngineError):
    """Exact and numeric nullities differ"""
    pass


class InconsistentAccountingError(EngineError):
    """Nullity is below the coboundary lower bound"""
    pass


class CertificationError(RigidityError):
    """Singular-value gap too small to certify a numeric rank"""
    pass
