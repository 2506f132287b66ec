"""Pipeline constants definition

Defines all constants used in the project.
"""

from pathlib import Path

# Exit codes
EXIT_OK = 0
EXIT_CONFIGURATION = 1
EXIT_INPUT = 2
EXIT_VALIDATION = 3
EXIT_ENGINE = 4
EXIT_CERTIFICATION = 5

# Numeric engine
DEFAULT_CERTIFICATION_THRESHOLD = 1e6
DEFAULT_SIZE_CAP = 20000

# Exact engine
DEFAULT_PROGRESS_EVERY = 500

# State search
EXHAUSTIVE_SEARCH_MAX_FACETS = 24

# Zigzag check
ZIGZAG_MIN_DIM = 2
ZIGZAG_MAX_DIM = 9

# Window levels kept by the zigzag subcomplex
ZIGZAG_LEVELS = (-1, 0, 1)

# Environment
ENV_WORKERS = 'RIGIDCOVER_WORKERS'

# Configuration file paths (in priority order)
CONFIG_PATH_LOCAL = './rigidcover.ini'
CONFIG_PATH_USER = '~/.rigidcover.ini'
CONFIG_SEARCH_PATHS = [CONFIG_PATH_LOCAL, CONFIG_PATH_USER]

# Shipped data files, addressed as builtin:<name>
BUILTIN_PREFIX = 'builtin:'
DATA_DIR = Path(__file__).resolve().parent.parent / 'data'
BUILTIN_FILES = {
    'octahedron': 'octahedron.json',
    'octahedron-checkerboard': 'octahedron_checkerboard.col',
    'octahedron-state': 'octahedron.state',
    '24cell': '24cell.json',
    '24cell-pairs': '24cell_pairs.col',
    'octahedron-paired': 'octahedron_paired.col',
    'octahedron-paired-state': 'octahedron_paired.state',
}


def resolve_input_path(value: str) -> Path:
    """Resolve a user-supplied input path

    Args:
        value: File path, or builtin:<name> for shipped data

    Returns:
        Path to the file (existence is not checked)

    Raises:
        KeyError: Unknown builtin name
    """
    if value.startswith(BUILTIN_PREFIX):
        name = value[len(BUILTIN_PREFIX):]
        return DATA_DIR / BUILTIN_FILES[name]
    return Path(value).expanduser()


def exit_code_for(error: BaseException) -> int:
    """Exit code for a pipeline error

    Args:
        error: Raised exception

    Returns:
        The code of the most specific failure class, EXIT_ENGINE for
        errors outside the hierarchy
    """
    from rigidcover.utils.exceptions import (
        CertificationError,
        ConfigurationError,
        EngineError,
        FieldError,
        InputError,
        ValidationError,
    )
    for kind, code in (
        (ConfigurationError, EXIT_CONFIGURATION),
        (InputError, EXIT_INPUT),
        (FieldError, EXIT_INPUT),
        (ValidationError, EXIT_VALIDATION),
        (EngineError, EXIT_ENGINE),
        (CertificationError, EXIT_CERTIFICATION),
    ):
        if isinstance(error, kind):
            return code
    return EXIT_ENGINE
