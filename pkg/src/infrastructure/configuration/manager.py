"""
Configuration manager - JSON file plus environment plus command-line flags.
"""

import json
from pathlib import Path
from typing import Dict, Any, Optional

from src.domain.exceptions import ConfigurationError
from src.domain.interfaces.base import ILogger
from src.domain.models.configuration import CommandConfig


class ConfigurationManager:
    """
    Loads an optional JSON config file and produces typed CommandConfig values.

    Precedence is defaults < file < environment < explicit flags; the
    environment layer is applied by ``CommandConfig.from_dict``.
    """

    def __init__(self, config_file_path: Optional[str], logger: ILogger):
        self.config_file_path = Path(config_file_path) if config_file_path else None
        self.logger = logger
        self._config_data: Dict[str, Any] = {}

        self._load_configuration()

    def get(self, key: str, default: Any = None) -> Any:
        return self._config_data.get(key, default)

    def get_all(self) -> Dict[str, Any]:
        return self._config_data.copy()

    def validate(self) -> bool:
        try:
            CommandConfig.from_dict(self._config_data)
            return True
        except (ValueError, TypeError) as e:
            self.logger.error("Configuration validation failed", component='configuration', error=str(e))
            return False

    def get_command_config(self, **cli_overrides: Any) -> CommandConfig:
        """Typed configuration; flags left as None fall through to lower layers."""
        try:
            config = CommandConfig.from_dict(self._config_data)
            return config.with_overrides(**cli_overrides)
        except (ValueError, TypeError) as e:
            raise ConfigurationError(f"Invalid configuration: {e}",
                                     {'file': str(self.config_file_path) if self.config_file_path else None})

    def _load_configuration(self) -> None:
        if self.config_file_path is None:
            return
        if not self.config_file_path.exists():
            raise ConfigurationError(f"Configuration file {self.config_file_path} not found")
        try:
            with open(self.config_file_path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigurationError(f"Invalid JSON in configuration file: {e}",
                                     {'file': str(self.config_file_path)})
        if not isinstance(data, dict):
            raise ConfigurationError("Configuration file must contain a JSON object",
                                     {'file': str(self.config_file_path)})
        self._config_data = data
        self.logger.info("Configuration loaded", component='configuration',
                         file=str(self.config_file_path), keys=sorted(data))
