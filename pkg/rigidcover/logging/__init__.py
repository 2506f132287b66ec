"""Logging module

Provides logging configuration functionality.
"""

from .setup import setup_logging, level_for_verbosity

__all__ = ['setup_logging', 'level_for_verbosity']
