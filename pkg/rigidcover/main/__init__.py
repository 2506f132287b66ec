"""CLI main function

Command-line entry point dispatching to the rigidcover subcommands.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from rigidcover import __version__
from rigidcover.cli import register_subparsers
from rigidcover.logging import setup_logging
from rigidcover.utils.constants import CONFIG_SEARCH_PATHS, EXIT_CONFIGURATION, exit_code_for
from rigidcover.utils.exceptions import ConfigurationError, RigidityError


def find_config_file() -> Optional[str]:
    """Find configuration file by priority order.

    Searches for configuration files in the following order:
    1. Local level: ./rigidcover.ini
    2. User level: ~/.rigidcover.ini

    Returns:
        Path string of the first existing configuration file, or None if not found.
    """
    for config_path in CONFIG_SEARCH_PATHS:
        expanded_path = Path(config_path).expanduser().resolve()
        if expanded_path.exists():
            return str(expanded_path)
    return None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='rigidcover-cli',
        description='Infinitesimal rigidity bounds for cyclic covers of coloured right-angled polytopes',
        add_help=True
    )
    parser.add_argument(
        '-c', '--config',
        default=None,
        help='Path to INI configuration file (default: auto-discover)'
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    subparsers = parser.add_subparsers(dest='command', help='Subcommands')
    register_subparsers(subparsers)
    return parser


def main(argv: List[str] = None) -> int:
    """Main entry point

    Args:
        argv: Command-line argument list (defaults to sys.argv[1:])

    Returns:
        Exit code (0 success, 1 configuration, 2 input, 3 validation,
        4 engine, 5 certification)

    Config Discovery:
        When -c is not specified, searches in order:
        1. ./rigidcover.ini
        2. ~/.rigidcover.ini

    Examples:
        rigidcover-cli zigzag 5
        rigidcover-cli search-states --polytope builtin:octahedron --colouring builtin:octahedron-checkerboard
        rigidcover-cli run --polytope builtin:octahedron --colouring builtin:octahedron-checkerboard \\
            --state builtin:octahedron-state -s 1 --engine both
    """
    if argv is None:
        argv = sys.argv[1:]

    parser = build_parser()
    args = parser.parse_args(argv)

    if not hasattr(args, 'func'):
        parser.print_help(sys.stderr)
        return EXIT_CONFIGURATION

    setup_logging(getattr(args, 'log_file', None), getattr(args, 'verbose', 0))

    if args.config is not None:
        config_path = Path(args.config).expanduser()
        if not config_path.exists():
            print(f'Error: Configuration file not found: {config_path}', file=sys.stderr)
            return EXIT_CONFIGURATION
        args.config_path = str(config_path)
    else:
        args.config_path = find_config_file()

    try:
        return args.func(args)
    except ConfigurationError as e:
        print(f'Configuration error: {e}', file=sys.stderr)
        return EXIT_CONFIGURATION
    except RigidityError as e:
        logging.debug('Pipeline failed', exc_info=True)
        print(f'Error ({type(e).__name__}): {e}', file=sys.stderr)
        return exit_code_for(e)
    except KeyboardInterrupt:
        print('\nStopped by user', file=sys.stderr)
        return EXIT_CONFIGURATION


if __name__ == '__main__':
    sys.exit(main())
