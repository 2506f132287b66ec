"""Configuration loader

Load and parse the run configuration from INI files.
"""

import configparser
from pathlib import Path

from rigidcover.config.models import RunConfig
from rigidcover.utils.exceptions import ConfigurationError


class ConfigLoader:
    """Configuration loader

    Responsible for loading the run configuration from INI files
    """

    SECTIONS = ('inputs', 'window', 'engine', 'output', 'logging')

    def __init__(self, config_path: str):
        """Initialize configuration loader

        Args:
            config_path: INI configuration file path

        Raises:
            ConfigurationError: File does not exist or cannot be parsed
        """
        self.config_path = Path(config_path).expanduser()
        self.parser = configparser.ConfigParser()
        self._load_file()

    def _load_file(self) -> None:
        """Load configuration file

        Raises:
            ConfigurationError: File does not exist, parsing failed or
                an unknown section is present
        """
        if not self.config_path.exists():
            raise ConfigurationError(f'Config file not found: {self.config_path}')

        try:
            self.parser.read(str(self.config_path), encoding='utf-8')
        except (configparser.Error, UnicodeDecodeError) as e:
            raise ConfigurationError(f'Failed to parse config: {e}')

        unknown = [s for s in self.parser.sections() if s not in self.SECTIONS]
        if unknown:
            raise ConfigurationError(
                f'Unknown config sections {unknown}; expected {list(self.SECTIONS)}'
            )

    def load_run_config(self) -> RunConfig:
        """Build a RunConfig from the file

        Returns:
            RunConfig with file values over defaults (not yet validated)
        """
        return RunConfig.from_config_parser(self.parser)
