"""Export-system command

Writes the assembled cocycle system as sparse triplets for external
cross-checking.
"""

import argparse
import sys

from rigidcover.cli.common import build_config, load_inputs
from rigidcover.complex import build_oriented_complex
from rigidcover.cover import build_window_s
from rigidcover.models import AssemblyMode
from rigidcover.system import assemble, export_system
from rigidcover.utils.constants import EXIT_OK
from rigidcover.utils.exceptions import ConfigurationError
from rigidcover.utils.executor import worker_count


def cmd_export_system(args: argparse.Namespace) -> int:
    """Assemble and export a system

    Args:
        args: Parsed command-line arguments
            - exact_output: Exact triplet file
            - float_output: Hex-float mirror file (optional)

    Returns:
        Exit code (0 = success)
    """
    config = build_config(args)
    if config.mode is AssemblyMode.BOTH:
        raise ConfigurationError('export-system needs a single assembly mode')
    inputs = load_inputs(config)
    cx = build_oriented_complex(inputs.polytope, inputs.colouring, inputs.state, inputs.rule)
    window = build_window_s(cx, config.s)
    system = assemble(window, inputs.polytope, config.mode, config.reduce_tangency,
                      worker_count(config.workers))
    count = export_system(system, args.exact_output, args.float_output)
    rows, cols = system.shape
    print(f'Exported {rows}x{cols} system with {count} nonzeros to {args.exact_output}',
          file=sys.stderr)
    return EXIT_OK
