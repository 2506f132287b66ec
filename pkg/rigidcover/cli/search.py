"""Search-states command

Lists the base states whose propagated states pass the link condition
at every vertex of C and orient it quasi-coherently.
"""

import argparse
import sys
from pathlib import Path

from rigidcover.cli.common import build_config, load_inputs
from rigidcover.complex import format_state
from rigidcover.cover import search_states
from rigidcover.utils.constants import EXIT_OK, EXIT_VALIDATION
from rigidcover.utils.executor import worker_count


def cmd_search_states(args: argparse.Namespace) -> int:
    """Search passing states

    Args:
        args: Parsed command-line arguments
            - write_dir: Also write each state as state_<k>.state here
            - limit: Print at most this many states

    Returns:
        Exit code (0 = some state passes, 3 = none does)
    """
    config = build_config(args, require_state=False)
    inputs = load_inputs(config, need_state=False)
    states = search_states(inputs.polytope, inputs.colouring, inputs.rule,
                           workers=worker_count(config.workers))

    shown = states if args.limit is None else states[:args.limit]
    for state in shown:
        print(state.encode())

    if args.write_dir:
        directory = Path(args.write_dir).expanduser()
        directory.mkdir(parents=True, exist_ok=True)
        for k, state in enumerate(shown):
            (directory / f'state_{k}.state').write_text(format_state(state, inputs.rule),
                                                        encoding='utf-8')

    print(f'{len(states)} passing states', file=sys.stderr)
    return EXIT_OK if states else EXIT_VALIDATION
