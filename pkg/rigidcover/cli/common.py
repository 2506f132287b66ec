"""Shared CLI helpers

Argument groups, configuration merging and input loading used by all
subcommands.
"""

import argparse
import hashlib
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional

from rigidcover.complex import Colouring, State, StateRule, load_colouring, load_state
from rigidcover.config import ConfigLoader, RunConfig, parse_pairing
from rigidcover.logging import setup_logging
from rigidcover.models import AssemblyMode, EngineKind, RuleVariant
from rigidcover.polytope import Polytope, load_polytope
from rigidcover.utils.constants import resolve_input_path
from rigidcover.utils.exceptions import ConfigurationError, InputError


def add_input_arguments(parser: argparse.ArgumentParser, with_state: bool = True) -> None:
    """Polytope, colouring, state and rule options"""
    parser.add_argument('--polytope', help='Polytope file or builtin:<name>')
    parser.add_argument('--colouring', help='Colouring file or builtin:<name>')
    if with_state:
        parser.add_argument('--state', help='State file or builtin:<name>')
    parser.add_argument('--rule', choices=[v.value for v in RuleVariant],
                        help='Propagation rule (overrides the state file)')
    parser.add_argument('--pairing', help='Colour pairing for the paired rule, e.g. 1-2,3-4')
    parser.add_argument('--workers', type=int, help='Worker processes (default: $RIGIDCOVER_WORKERS or 1)')


def add_window_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('-s', '--window-s', dest='s', type=int,
                        help='Window parameter s, window [-1, 2s-1] (default: 1)')


def add_engine_arguments(parser: argparse.ArgumentParser) -> None:
    """Assembly and rank engine options"""
    parser.add_argument('--engine', choices=[v.value for v in EngineKind],
                        help='Rank engine (default: both)')
    parser.add_argument('--mode', choices=[v.value for v in AssemblyMode],
                        help='Relator assembly mode (default: simplified)')
    parser.add_argument('--tolerance', help='Numeric tolerance or "auto" (default: auto)')
    parser.add_argument('--threshold', type=float,
                        help='Gap ratio needed to certify a numeric verdict (default: 1e6)')
    parser.add_argument('--size-cap', dest='size_cap', type=int,
                        help='Largest column count for dense SVD (default: 20000)')
    parser.add_argument('--reduce-tangency', dest='reduce_tangency', action='store_true',
                        default=None, help='Solve the tangency blocks before elimination')
    parser.add_argument('--seed', type=int, help='Pivot and spanning tree randomization seed')
    parser.add_argument('--progress-every', dest='progress_every', type=int,
                        help='Exact engine pivots between progress lines (default: 500)')


def add_logging_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='Increase verbosity (can be used: -v, -vv)')
    parser.add_argument('--log-file', dest='log_file', help='Also write the log to this file')


_DIRECT_OVERRIDES = (
    'polytope', 'colouring', 'state', 's', 'threshold', 'size_cap', 'reduce_tangency',
    'seed', 'progress_every', 'compare_base', 'oracle', 'output', 'workers', 'log_file',
    'search_states',
)


def build_config(args: argparse.Namespace, require_state: bool = True) -> RunConfig:
    """Merge the INI file (if any) with command-line flags

    Flags that were not given keep the file's value.

    Raises:
        ConfigurationError: Invalid file, flag value or combination
    """
    config_path = getattr(args, 'config_path', None)
    config = ConfigLoader(config_path).load_run_config() if config_path else RunConfig()

    for name in _DIRECT_OVERRIDES:
        value = getattr(args, name, None)
        if value is not None:
            setattr(config, name, value)
    if getattr(args, 'csv', None):
        config.csv_path = args.csv
    try:
        if getattr(args, 'rule', None):
            config.rule = RuleVariant.from_string(args.rule)
        if getattr(args, 'pairing', None):
            config.pairing = parse_pairing(args.pairing)
        if getattr(args, 'engine', None):
            config.engine = EngineKind.from_string(args.engine)
        if getattr(args, 'mode', None):
            config.mode = AssemblyMode.from_string(args.mode)
        tolerance = getattr(args, 'tolerance', None)
        if tolerance is not None:
            config.tolerance = None if tolerance.strip().lower() == 'auto' else float(tolerance)
    except ValueError as e:
        raise ConfigurationError(str(e))

    config.validate(require_state=require_state)
    if config.log_file and not getattr(args, 'log_file', None):
        setup_logging(config.log_file, getattr(args, 'verbose', 0))
    if config_path:
        logging.info('Using configuration file %s', config_path)
    return config


def file_digest(path: Path) -> str:
    return 'sha256:' + hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _resolve(value: str, what: str) -> Path:
    try:
        path = resolve_input_path(value)
    except KeyError:
        raise InputError(f'Unknown builtin {what}: {value}')
    if not path.exists():
        raise InputError(f'{what.capitalize()} file not found: {path}')
    return path


@dataclass
class Inputs:
    """Loaded pipeline inputs

    Attributes:
        polytope: Validated polytope
        colouring: Colouring (not yet checked for properness)
        state: Base state, None when states are searched
        rule: Propagation rule
        digests: Input name -> content hash
    """
    polytope: Polytope
    colouring: Colouring
    state: Optional[State]
    rule: StateRule
    digests: Dict[str, str]


def load_inputs(config: RunConfig, need_state: bool = True) -> Inputs:
    """Load polytope, colouring and (optionally) state files

    The rule comes from the state file unless the configuration
    overrides it; the configuration's pairing replaces the file's.

    Raises:
        InputError: Missing or malformed file
        ValidationError: Polytope data is inconsistent
    """
    polytope_path = _resolve(config.polytope, 'polytope')
    colouring_path = _resolve(config.colouring, 'colouring')
    polytope = load_polytope(polytope_path)
    colouring = load_colouring(colouring_path)
    digests = {
        'polytope': file_digest(polytope_path),
        'colouring': file_digest(colouring_path),
    }

    state = None
    rule = StateRule()
    if need_state and config.state:
        state_path = _resolve(config.state, 'state')
        state, rule = load_state(state_path, polytope.facet_ids)
        digests['state'] = file_digest(state_path)
    if config.rule is not None:
        rule = StateRule(config.rule, config.pairing or rule.pairing)
    elif config.pairing:
        rule = StateRule(rule.variant, config.pairing)
    return Inputs(polytope, colouring, state, rule, digests)
