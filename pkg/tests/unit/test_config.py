"""Unit tests for rigidcover.config

Tests INI loading, validation and the report echo of the run configuration.
"""

import pytest

from rigidcover.config import ConfigLoader, RunConfig, format_pairing, parse_pairing
from rigidcover.models import AssemblyMode, EngineKind, RuleVariant
from rigidcover.utils.exceptions import ConfigurationError
from tests.conftest import render_config


class TestPairing:
    """Test colour pairing parsing."""

    def test_parse(self):
        assert parse_pairing('1-2, 3-4') == ((1, 2), (3, 4))
        assert parse_pairing('') == ()

    def test_format(self):
        assert format_pairing(((1, 2), (3, 4))) == '1-2,3-4'

    @pytest.mark.parametrize('text', ['1', '1-2-3', 'a-b'])
    def test_malformed(self, text):
        with pytest.raises(ConfigurationError):
            parse_pairing(text)


class TestRunConfig:
    """Test defaults and validation."""

    def _valid(self, **changes):
        config = RunConfig(polytope='builtin:octahedron',
                           colouring='builtin:octahedron-checkerboard',
                           state='builtin:octahedron-state')
        for name, value in changes.items():
            setattr(config, name, value)
        return config

    def test_defaults(self):
        config = RunConfig()
        assert config.engine is EngineKind.BOTH
        assert config.mode is AssemblyMode.SIMPLIFIED
        assert config.window == (-1, 1)
        assert config.tolerance is None

    def test_window(self):
        assert self._valid(s=3).window == (-1, 5)

    def test_valid(self):
        self._valid().validate()

    @pytest.mark.parametrize('changes', [
        {'polytope': ''},
        {'colouring': ''},
        {'state': ''},
        {'s': 0},
        {'tolerance': -1.0},
        {'threshold': 0.0},
        {'size_cap': 0},
        {'progress_every': -1},
    ])
    def test_invalid(self, changes):
        with pytest.raises(ConfigurationError):
            self._valid(**changes).validate()

    def test_search_replaces_state(self):
        self._valid(state='', search_states=True).validate()
        self._valid(state='').validate(require_state=False)

    def test_paired_rule_without_pairing(self):
        with pytest.raises(ConfigurationError):
            self._valid(state='', search_states=True, rule=RuleVariant.PAIRED).validate()

    def test_echo_leaves_out_locations(self):
        data = self._valid(output='/tmp/r.json', csv_path='/tmp/r.csv', workers=4,
                           pairing=((1, 2),)).to_dict()
        assert 'output' not in data
        assert 'csv_path' not in data
        assert 'workers' not in data
        assert data['engine'] == 'both'
        assert data['tolerance'] == 'auto'
        assert data['pairing'] == '1-2'
        assert data['rule'] is None


class TestConfigLoader:
    """Test the INI loader."""

    def test_sample_config(self, tmp_path):
        path = render_config(tmp_path / 'run.ini', report='out.json', log_file='')
        config = ConfigLoader(path).load_run_config()
        assert config.polytope == 'builtin:octahedron'
        assert config.state == 'builtin:octahedron-state'
        assert config.engine is EngineKind.EXACT
        assert config.seed == 7
        assert config.oracle is True
        assert config.output == 'out.json'
        assert config.log_file == ''
        config.validate()

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigurationError):
            ConfigLoader(str(tmp_path / 'missing.ini'))

    def test_unknown_section(self, tmp_path):
        path = tmp_path / 'bad.ini'
        path.write_text('[server]\nport = 8080\n', encoding='utf-8')
        with pytest.raises(ConfigurationError):
            ConfigLoader(str(path))

    def test_not_ini(self, tmp_path):
        path = tmp_path / 'bad.ini'
        path.write_text('not an ini file\n[broken\n', encoding='utf-8')
        with pytest.raises(ConfigurationError):
            ConfigLoader(str(path))

    @pytest.mark.parametrize('section, line', [
        ('window', 's = two'),
        ('engine', 'engine = gpu'),
        ('engine', 'tolerance = small'),
        ('inputs', 'rule = mirrored'),
    ])
    def test_invalid_values(self, tmp_path, section, line):
        path = tmp_path / 'bad.ini'
        path.write_text(f'[{section}]\n{line}\n', encoding='utf-8')
        with pytest.raises(ConfigurationError):
            ConfigLoader(str(path)).load_run_config()

    def test_explicit_values(self, tmp_path):
        path = tmp_path / 'run.ini'
        path.write_text(
            '[inputs]\nrule = paired\npairing = 1-2\n'
            '[engine]\nmode = both\ntolerance = 1e-9\nreduce_tangency = yes\n',
            encoding='utf-8',
        )
        config = ConfigLoader(str(path)).load_run_config()
        assert config.rule is RuleVariant.PAIRED
        assert config.pairing == ((1, 2),)
        assert config.mode is AssemblyMode.BOTH
        assert config.tolerance == 1e-9
        assert config.reduce_tangency is True
