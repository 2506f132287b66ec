"""Logging configuration

Configures the application logging system.
"""

import logging
import sys
from pathlib import Path
from typing import Optional

LOG_FORMAT = '%(asctime)s %(levelname)s %(message)s'
LOG_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def level_for_verbosity(verbose: int) -> int:
    """Map a -v count to a logging level

    Args:
        verbose: Number of -v flags

    Returns:
        WARNING for 0, INFO for 1, DEBUG for 2 or more
    """
    if verbose <= 0:
        return logging.WARNING
    if verbose == 1:
        return logging.INFO
    return logging.DEBUG


def setup_logging(log_file: Optional[str] = None, verbose: int = 0) -> None:
    """Configure the logging system

    Args:
        log_file: Log file path (empty or None = no file logging)
        verbose: Number of -v flags

    Logging goes to stderr, stdout carries reports only:
    - if log_file is empty, only stderr is used
    - if log_file is set, records go to the file (always at DEBUG) and stderr
    - if the log file cannot be created, only stderr is used (with a warning)
    """
    handlers = []
    formatter = logging.Formatter(LOG_FORMAT, datefmt=LOG_DATE_FORMAT)

    if log_file:
        try:
            log_path = Path(log_file).expanduser()
            log_path.parent.mkdir(parents=True, exist_ok=True)

            file_handler = logging.FileHandler(str(log_path), encoding='utf-8')
            file_handler.setFormatter(formatter)
            file_handler.setLevel(logging.DEBUG)
            handlers.append(file_handler)
        except OSError as e:
            import warnings
            warnings.warn(f'Cannot create log file {log_file}: {e}, logging to console only')

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    console_handler.setLevel(level_for_verbosity(verbose))
    handlers.append(console_handler)

    logging.basicConfig(level=logging.DEBUG, handlers=handlers, force=True)
