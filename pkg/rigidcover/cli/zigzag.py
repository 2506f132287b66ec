"""Zigzag command

Prints the connectivity table of the level-(-1, 0, 1) subcomplex for
every cube dimension, template and offset.
"""

import argparse
import json
import sys

from rigidcover.cover import zigzag_table
from rigidcover.utils.constants import EXIT_CONFIGURATION, EXIT_OK, EXIT_VALIDATION


def cmd_zigzag(args: argparse.Namespace) -> int:
    """Run the zigzag check up to a dimension

    Args:
        args: Parsed command-line arguments
            - max_dim: Largest cube dimension (2..9)
            - json: Emit JSON instead of a text table

    Returns:
        Exit code (0 = all connected, 1 = bad dimension, 3 = some case fails)
    """
    try:
        results = zigzag_table(args.max_dim)
    except ValueError as e:
        print(f'Error: {e}', file=sys.stderr)
        return EXIT_CONFIGURATION

    if args.json:
        sys.stdout.write(json.dumps([r.to_dict() for r in results], indent=2) + '\n')
    else:
        print(f'{"dim":>3} {"template":<18} {"offset":>6} connected')
        for r in results:
            print(f'{r.dim:>3} {r.template.value:<18} {r.offset:>6} {"yes" if r.connected else "NO"}')

    failures = [r for r in results if not r.connected]
    if failures:
        print(f'{len(failures)} of {len(results)} cases are disconnected', file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK
