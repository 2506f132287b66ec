"""CLI subcommands module

Provides subcommand registration and implementation for rigidcover-cli.
"""

from rigidcover.cli.common import (
    add_engine_arguments,
    add_input_arguments,
    add_logging_arguments,
    add_window_arguments,
)
from rigidcover.cli.export import cmd_export_system
from rigidcover.cli.run import cmd_run, run_pipeline
from rigidcover.cli.search import cmd_search_states
from rigidcover.cli.validate import cmd_validate, run_checks
from rigidcover.cli.zigzag import cmd_zigzag
from rigidcover.utils.constants import ZIGZAG_MAX_DIM


def register_subparsers(subparsers):
    """Register all CLI subparsers

    Args:
        subparsers: argparse subparsers object from ArgumentParser.add_subparsers()

    Returns:
        None
    """
    register_validate_subparser(subparsers)
    register_run_subparser(subparsers)
    register_zigzag_subparser(subparsers)
    register_search_subparser(subparsers)
    register_export_subparser(subparsers)


def register_validate_subparser(subparsers):
    parser = subparsers.add_parser(
        'validate',
        help='Check colouring, states, squares, cubes and links'
    )
    add_input_arguments(parser)
    add_logging_arguments(parser)
    parser.set_defaults(func=cmd_validate)


def register_run_subparser(subparsers):
    parser = subparsers.add_parser(
        'run',
        help='Assemble the cocycle system of a window and bound H1'
    )
    add_input_arguments(parser)
    add_window_arguments(parser)
    add_engine_arguments(parser)
    add_logging_arguments(parser)
    parser.add_argument(
        '--search-states',
        dest='search_states',
        action='store_true',
        default=None,
        help='Run once per passing state instead of reading --state'
    )
    parser.add_argument(
        '--compare-base',
        dest='compare_base',
        action='store_true',
        default=None,
        help='Also report the nullity of the base complex C'
    )
    parser.add_argument(
        '--oracle',
        action='store_true',
        default=None,
        help='Also check the groupoid/group nullity relation'
    )
    parser.add_argument('-o', '--output', help='Report path (default: stdout)')
    parser.add_argument('--csv', help='Also write a summary table to this path')
    parser.set_defaults(func=cmd_run)


def register_zigzag_subparser(subparsers):
    parser = subparsers.add_parser(
        'zigzag',
        help='Check the zigzag connectivity of cube templates'
    )
    parser.add_argument(
        'max_dim',
        nargs='?',
        type=int,
        default=ZIGZAG_MAX_DIM,
        help=f'Largest cube dimension, 2..{ZIGZAG_MAX_DIM} (default: {ZIGZAG_MAX_DIM})'
    )
    parser.add_argument('--json', action='store_true', help='Emit JSON')
    add_logging_arguments(parser)
    parser.set_defaults(func=cmd_zigzag)


def register_search_subparser(subparsers):
    parser = subparsers.add_parser(
        'search-states',
        help='List base states passing the link and quasi-coherence checks'
    )
    add_input_arguments(parser, with_state=False)
    add_logging_arguments(parser)
    parser.add_argument('--limit', type=int, help='Print at most this many states')
    parser.add_argument('--write-dir', dest='write_dir',
                        help='Also write each printed state as a state file here')
    parser.set_defaults(func=cmd_search_states)


def register_export_subparser(subparsers):
    parser = subparsers.add_parser(
        'export-system',
        help='Write the exact system and its float mirror as sparse triplets'
    )
    add_input_arguments(parser)
    add_window_arguments(parser)
    parser.add_argument('--mode', choices=['generic', 'simplified'],
                        help='Relator assembly mode (default: simplified)')
    parser.add_argument('--reduce-tangency', dest='reduce_tangency', action='store_true',
                        default=None, help='Export the tangency-reduced system')
    parser.add_argument('exact_output', help='Exact triplet file')
    parser.add_argument('float_output', nargs='?', help='Hex-float mirror file')
    add_logging_arguments(parser)
    parser.set_defaults(func=cmd_export_system)


__all__ = [
    'register_subparsers',
    'cmd_validate',
    'cmd_run',
    'cmd_zigzag',
    'cmd_search_states',
    'cmd_export_system',
    'run_pipeline',
    'run_checks',
]
