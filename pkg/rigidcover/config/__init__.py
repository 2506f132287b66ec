"""Configuration module

Run configuration and its INI loader.
"""

from .models import RunConfig, parse_pairing, format_pairing
from .loader import ConfigLoader

__all__ = [
    'RunConfig',
    'ConfigLoader',
    'parse_pairing',
    'format_pairing',
]
