"""Validate command

Runs the combinatorial checks on a polytope, colouring and state without
assembling any linear system.
"""

import argparse
import json
import sys
from typing import List

from rigidcover.cli.common import build_config, load_inputs
from rigidcover.complex import (
    build_oriented_complex,
    check_links,
    validate_colouring,
    validate_quasi_coherence,
)
from rigidcover.models import CheckResult
from rigidcover.utils.constants import EXIT_OK, EXIT_VALIDATION
from rigidcover.utils.exceptions import ValidationError


def run_checks(inputs) -> List[CheckResult]:
    """Colouring, propagation, squares, quasi-coherence and links

    Stops after the first stage whose failure makes later stages
    meaningless (improper colouring, inconsistent propagation).
    """
    p, col = inputs.polytope, inputs.colouring
    results = []

    violations = validate_colouring(p, col)
    if violations:
        results.append(CheckResult.failure('colouring', [f'{i}-{j}' for i, j in violations],
                                           colours=col.c))
        return results
    results.append(CheckResult.success('colouring', colours=col.c))

    try:
        cx = build_oriented_complex(p, col, inputs.state, inputs.rule)
    except ValidationError as e:
        results.append(CheckResult.failure('states', [str(e)], rule=inputs.rule.variant.value))
        return results
    results.append(CheckResult.success('states', rule=inputs.rule.variant.value, **cx.counts()))

    tally = cx.square_tally()
    invalid = cx.invalid_squares()
    if invalid:
        results.append(CheckResult.failure(
            'squares', [f'{sq.facets}@{sq.base}' for sq in invalid], **tally))
    else:
        results.append(CheckResult.success('squares', **tally))

    offending = validate_quasi_coherence(cx)
    if offending:
        results.append(CheckResult.failure(
            'quasi_coherence', [f'{cube.facets}@{cube.base}' for cube in offending]))
    else:
        results.append(CheckResult.success('quasi_coherence'))

    statuses = check_links(cx, p)
    failing = [s for s in statuses if not s.passed]
    problems = [
        f'{s.vertex}: ascending {"ok" if s.ascending else "disconnected"}, '
        f'descending {"ok" if s.descending else "disconnected"}'
        for s in failing
    ]
    if failing:
        results.append(CheckResult.failure('links', problems, vertices=len(statuses)))
    else:
        results.append(CheckResult.success('links', vertices=len(statuses)))
    return results


def cmd_validate(args: argparse.Namespace) -> int:
    """Validate inputs

    Args:
        args: Parsed command-line arguments

    Returns:
        Exit code (0 = all checks passed, 3 = some check failed)
    """
    config = build_config(args)
    inputs = load_inputs(config)
    results = run_checks(inputs)
    passed = all(r.passed for r in results)
    report = {
        'inputs': inputs.digests,
        'checks': [r.to_dict() for r in results],
        'passed': passed,
    }
    sys.stdout.write(json.dumps(report, indent=2) + '\n')
    for r in results:
        if not r.passed:
            print(f'Check {r.name} failed: {", ".join(r.problems[:10])}', file=sys.stderr)
    return EXIT_OK if passed else EXIT_VALIDATION
