"""rigidcover - infinitesimal rigidity of cyclic covers of coloured right-angled polytopes.

Builds the cube complex of a coloured right-angled hyperbolic polytope,
a finite window of its infinite cyclic cover, and the cocycle system
whose nullity bounds dim H1.
"""

__version__ = '1.0.0'

__all__ = [
    '__version__',
]
