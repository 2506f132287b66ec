"""Run command

Builds C and the window, assembles the cocycle system, ranks it and
writes the report.
"""

import argparse
import json
import logging
import sys
from fractions import Fraction
from functools import partial
from pathlib import Path
from typing import Any, Dict, List, Optional

from rigidcover.cli.common import Inputs, build_config, load_inputs
from rigidcover.complex import State, build_oriented_complex
from rigidcover.config import RunConfig
from rigidcover.cover import build_window_s, search_states
from rigidcover.models import AssemblyMode, Verdict
from rigidcover.rank import (
    EngineFactory,
    RankReport,
    agreed_nullity,
    decide_verdict,
    groupoid_group_oracle,
    h1_bound,
    run_engines,
    write_csv,
)
from rigidcover.system import assemble, assemble_base
from rigidcover.utils.constants import EXIT_CERTIFICATION, EXIT_OK
from rigidcover.utils.exceptions import InconsistentAccountingError
from rigidcover.utils.executor import map_ordered, worker_count


def _modes(mode: AssemblyMode) -> List[AssemblyMode]:
    if mode is AssemblyMode.BOTH:
        return [AssemblyMode.SIMPLIFIED, AssemblyMode.GENERIC]
    return [mode]


def run_pipeline(config: RunConfig, inputs: Inputs, state: State, workers: int = 1) -> RankReport:
    """Full pipeline for one base state

    Raises:
        ValidationError: Colouring, states, squares, cubes or links are invalid
        EngineError: Engines disagree, the size cap is hit or the
            accounting is inconsistent
    """
    p, col, rule = inputs.polytope, inputs.colouring, inputs.rule
    cx = build_oriented_complex(p, col, state, rule)
    window = build_window_s(cx, config.s)
    logging.info('Complex C: %s; window [%d, %d]: %s', cx.counts(), window.m, window.n, window.counts())

    engines = EngineFactory.get_engines(
        config.engine, tolerance=config.tolerance, size_cap=config.size_cap,
        seed=config.seed, progress_every=config.progress_every,
    )

    systems = [assemble(window, p, mode, config.reduce_tangency, workers)
               for mode in _modes(config.mode)]
    system = systems[0]
    per_mode = run_engines(engines, systems, workers)
    results = per_mode[0]
    mode_nullity = {s.mode.value: agreed_nullity(r) for s, r in zip(systems, per_mode)}
    nullity = agreed_nullity(results)
    if len(set(mode_nullity.values())) != 1:
        raise InconsistentAccountingError(f'Assembly modes disagree on the nullity: {mode_nullity}')

    accounting = h1_bound(nullity, system.vertex_count, p.n)
    verdict = decide_verdict(results, accounting, config.threshold)

    extra: Dict[str, Any] = {
        'mode': config.mode.value,
        'reduced': system.reduced,
        'mode_nullity': mode_nullity,
        'state': state.encode(),
        'rule': rule.variant.value,
        'counts': {'complex': cx.counts(), 'window': window.counts(),
                   'squares': cx.square_tally()},
        'config': config.to_dict(),
        'inputs': dict(inputs.digests),
    }

    if config.compare_base:
        base = assemble_base(cx, p, system.mode, config.reduce_tangency)
        base_nullity = engines[-1].nullity(base).nullity
        extra['base'] = {
            'rows': base.shape[0],
            'cols': base.shape[1],
            'nullity': base_nullity,
            'window_nullity': nullity,
            'vertex_count': base.vertex_count,
            'vertex_ratio': str(Fraction(system.vertex_count, base.vertex_count)),
        }

    if config.oracle:
        oracle = groupoid_group_oracle(system, engines[-1], config.seed)
        extra['oracle'] = oracle.to_dict()
        if not oracle.holds:
            raise InconsistentAccountingError(f'Groupoid/group oracle fails: {oracle.to_dict()}')

    report = RankReport.from_results(config.engine, results, accounting, verdict,
                                     window=(window.m, window.n), **extra)
    logging.info('State %s: nullity %d, H1 bound %d, verdict %s',
                 state.encode(), nullity, accounting.bound, verdict.value)
    return report


def _run_for_state(config: RunConfig, inputs: Inputs, state: State) -> RankReport:
    return run_pipeline(config, inputs, state, workers=1)


def _write(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).expanduser().write_text(text, encoding='utf-8')
    else:
        sys.stdout.write(text)


def cmd_run(args: argparse.Namespace) -> int:
    """Run the pipeline

    Args:
        args: Parsed command-line arguments

    Returns:
        Exit code (0 = success, 5 = some verdict could not be certified)
    """
    config = build_config(args)
    workers = worker_count(config.workers)

    if config.search_states:
        inputs = load_inputs(config, need_state=False)
        states = search_states(inputs.polytope, inputs.colouring, inputs.rule, workers=workers)
        reports = map_ordered(partial(_run_for_state, config, inputs), states, workers=workers)
        text = ''.join(json.dumps(r.to_dict()) + '\n' for r in reports)
        rows = [r.csv_row(state.encode()) for r, state in zip(reports, states)]
    else:
        inputs = load_inputs(config)
        reports = [run_pipeline(config, inputs, inputs.state, workers)]
        text = reports[0].to_json()
        rows = [reports[0].csv_row(inputs.state.encode())]

    _write(text, config.output)
    if config.csv_path:
        write_csv(Path(config.csv_path).expanduser(), rows)

    if any(r.verdict is Verdict.INCONCLUSIVE for r in reports):
        print('Warning: numeric rank could not be certified', file=sys.stderr)
        return EXIT_CERTIFICATION
    return EXIT_OK
