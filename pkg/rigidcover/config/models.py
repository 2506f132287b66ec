"""Configuration data models

Defines the run configuration dataclass.
"""

import configparser
from dataclasses import dataclass, field, fields
from typing import Any, Dict, Optional, Tuple

from rigidcover.models import AssemblyMode, EngineKind, RuleVariant
from rigidcover.utils.constants import (
    DEFAULT_CERTIFICATION_THRESHOLD,
    DEFAULT_PROGRESS_EVERY,
    DEFAULT_SIZE_CAP,
)
from rigidcover.utils.exceptions import ConfigurationError

Pairing = Tuple[Tuple[int, int], ...]


def parse_pairing(text: str) -> Pairing:
    """Parse '1-2,3-4' into ((1, 2), (3, 4))

    Raises:
        ConfigurationError: Malformed pairing
    """
    pairs = []
    for item in text.split(','):
        item = item.strip()
        if not item:
            continue
        try:
            first, second = (int(x) for x in item.split('-'))
        except ValueError:
            raise ConfigurationError(f'Invalid colour pair {item!r}: expected <i>-<j>')
        pairs.append((first, second))
    return tuple(pairs)


def format_pairing(pairing: Pairing) -> str:
    return ','.join(f'{i}-{j}' for i, j in pairing)


@dataclass
class RunConfig:
    """Pipeline configuration

    Attributes:
        polytope: Polytope file or builtin:<name>
        colouring: Colouring file or builtin:<name>
        state: State file or builtin:<name> (empty with search_states)
        search_states: Run once per state passing the link condition
        rule: Rule variant overriding the state file's
        pairing: Colour pairing for the paired rule
        s: Window parameter, window [-1, 2s - 1]
        engine: Rank engine selection
        tolerance: Numeric cut-off (None = auto)
        mode: Relator assembly mode
        threshold: Gap ratio needed to certify a numeric verdict
        size_cap: Largest column count for the numeric engine
        reduce_tangency: Parametrize unknowns by Lie algebra coordinates
        progress_every: Exact engine progress logging interval
        seed: Pivot and spanning tree randomization
        compare_base: Also report the nullity of C itself
        oracle: Also run the groupoid/group oracle
        output: Report path (empty = stdout)
        csv_path: Summary table path (empty = none)
        workers: Worker processes (None = environment)
        log_file: Log file path (empty = console only)
    """
    polytope: str = ''
    colouring: str = ''
    state: str = ''
    search_states: bool = False
    rule: Optional[RuleVariant] = None
    pairing: Pairing = field(default_factory=tuple)
    s: int = 1
    engine: EngineKind = EngineKind.BOTH
    tolerance: Optional[float] = None
    mode: AssemblyMode = AssemblyMode.SIMPLIFIED
    threshold: float = DEFAULT_CERTIFICATION_THRESHOLD
    size_cap: int = DEFAULT_SIZE_CAP
    reduce_tangency: bool = False
    progress_every: int = DEFAULT_PROGRESS_EVERY
    seed: Optional[int] = None
    compare_base: bool = False
    oracle: bool = False
    output: str = ''
    csv_path: str = ''
    workers: Optional[int] = None
    log_file: str = ''

    @property
    def window(self) -> Tuple[int, int]:
        return (-1, 2 * self.s - 1)

    @classmethod
    def from_config_parser(cls, parser: configparser.ConfigParser) -> 'RunConfig':
        """Load a configuration from ConfigParser

        Missing sections and options keep their defaults.

        Raises:
            ConfigurationError: An option has an invalid value
        """
        config = cls()
        try:
            config.polytope = parser.get('inputs', 'polytope', fallback=config.polytope)
            config.colouring = parser.get('inputs', 'colouring', fallback=config.colouring)
            config.state = parser.get('inputs', 'state', fallback=config.state)
            rule = parser.get('inputs', 'rule', fallback='').strip()
            if rule:
                config.rule = RuleVariant.from_string(rule)
            config.pairing = parse_pairing(parser.get('inputs', 'pairing', fallback=''))

            config.s = parser.getint('window', 's', fallback=config.s)

            engine = parser.get('engine', 'engine', fallback='').strip()
            if engine:
                config.engine = EngineKind.from_string(engine)
            mode = parser.get('engine', 'mode', fallback='').strip()
            if mode:
                config.mode = AssemblyMode.from_string(mode)
            tolerance = parser.get('engine', 'tolerance', fallback='auto').strip().lower()
            config.tolerance = None if tolerance in ('', 'auto') else float(tolerance)
            config.threshold = parser.getfloat('engine', 'threshold', fallback=config.threshold)
            config.size_cap = parser.getint('engine', 'size_cap', fallback=config.size_cap)
            config.reduce_tangency = parser.getboolean('engine', 'reduce_tangency',
                                                       fallback=config.reduce_tangency)
            config.progress_every = parser.getint('engine', 'progress_every',
                                                  fallback=config.progress_every)
            seed = parser.get('engine', 'seed', fallback='').strip()
            config.seed = int(seed) if seed else None
            workers = parser.get('engine', 'workers', fallback='').strip()
            config.workers = int(workers) if workers else None

            config.output = parser.get('output', 'report', fallback=config.output)
            config.csv_path = parser.get('output', 'csv', fallback=config.csv_path)
            config.compare_base = parser.getboolean('output', 'compare_base',
                                                    fallback=config.compare_base)
            config.oracle = parser.getboolean('output', 'oracle', fallback=config.oracle)

            config.log_file = parser.get('logging', 'log_file', fallback=config.log_file).strip()
        except ValueError as e:
            raise ConfigurationError(f'Invalid configuration value: {e}')
        return config

    def validate(self, require_state: bool = True) -> None:
        """Validate the configuration

        Args:
            require_state: A state file (or search_states) is needed

        Raises:
            ConfigurationError: Configuration is invalid
        """
        if not self.polytope:
            raise ConfigurationError('Polytope is required')
        if not self.colouring:
            raise ConfigurationError('Colouring is required')
        if require_state and not self.state and not self.search_states:
            raise ConfigurationError('A state file or --search-states is required')
        if self.s < 1:
            raise ConfigurationError(f'Window parameter s must be >= 1, got {self.s}')
        if self.rule is RuleVariant.PAIRED and not self.pairing and not self.state:
            raise ConfigurationError('The paired rule needs a pairing')
        if self.tolerance is not None and self.tolerance < 0:
            raise ConfigurationError(f'Tolerance must be non-negative, got {self.tolerance}')
        if self.threshold <= 0:
            raise ConfigurationError(f'Certification threshold must be positive, got {self.threshold}')
        if self.size_cap < 1:
            raise ConfigurationError(f'Size cap must be positive, got {self.size_cap}')
        if self.progress_every < 0:
            raise ConfigurationError('progress_every must be >= 0')

    def to_dict(self) -> Dict[str, Any]:
        """Configuration echo for reports

        Output locations and worker counts are left out so that reports
        do not depend on where or how they were produced.
        """
        skip = {'output', 'csv_path', 'workers', 'log_file', 'progress_every'}
        data: Dict[str, Any] = {}
        for f in fields(self):
            if f.name in skip:
                continue
            value = getattr(self, f.name)
            if f.name == 'pairing':
                value = format_pairing(value)
            elif hasattr(value, 'value'):
                value = value.value
            elif f.name == 'tolerance' and value is None:
                value = 'auto'
            data[f.name] = value
        return data
