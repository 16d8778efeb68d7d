"""
Configuration models and validation.
"""

from dataclasses import dataclass, replace
from typing import Dict, Any
import os

from src.domain.exceptions import ValidationError
from src.domain.geometry.operators import GeometryId

OUTPUT_FORMATS = ("text", "json")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class CommandConfig:
    """Settings shared by every command."""

    geometry: str = "sol"

    # Exact engine limits
    max_r: int = 64
    term_cap: int = 100_000

    # Numeric oracle
    seed: int = 20240601
    fd_step: float = 1e-4
    fd_tol: float = 1e-6
    fd_points: int = 10
    fd_radius: float = 0.5

    # Catalog runner
    workers: int = 4

    output: str = "text"
    log_level: str = "WARNING"

    def __post_init__(self):
        """Validate configuration after initialization."""
        self._validate_caps()
        self._validate_numeric()
        self._validate_choices()

    def _validate_caps(self) -> None:
        if self.max_r < 1:
            raise ValueError("max_r must be at least 1")
        if self.term_cap < 1:
            raise ValueError("term_cap must be at least 1")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if self.seed < 0:
            raise ValueError("seed must be a natural number")

    def _validate_numeric(self) -> None:
        if not self.fd_step > 0:
            raise ValueError("fd_step must be positive")
        if not self.fd_tol > 0:
            raise ValueError("fd_tol must be positive")
        if self.fd_points < 1:
            raise ValueError("fd_points must be at least 1")
        if not self.fd_radius > 0:
            raise ValueError("fd_radius must be positive")

    def _validate_choices(self) -> None:
        try:
            GeometryId.from_string(self.geometry)
        except ValidationError as e:
            raise ValueError(e.message)
        if self.output not in OUTPUT_FORMATS:
            raise ValueError(f"output must be one of {OUTPUT_FORMATS}")
        if self.log_level.upper() not in LOG_LEVELS:
            raise ValueError(f"log_level must be one of {LOG_LEVELS}")

    @classmethod
    def from_dict(cls, config_dict: Dict[str, Any]) -> 'CommandConfig':
        """Create configuration from dictionary with environment variable support."""
        config_dict = dict(config_dict)
        env_overrides = {
            'seed': os.getenv('POLYHARM_SEED'),
            'max_r': os.getenv('POLYHARM_MAX_R'),
            'term_cap': os.getenv('POLYHARM_TERM_CAP'),
            'log_level': os.getenv('POLYHARM_LOG_LEVEL'),
        }

        for key, env_value in env_overrides.items():
            if env_value is not None:
                if key == 'log_level':
                    config_dict[key] = env_value.upper()
                else:
                    config_dict[key] = int(env_value)

        known = set(cls.__dataclass_fields__)
        unknown = set(config_dict) - known
        if unknown:
            raise ValueError(f"unknown configuration keys: {sorted(unknown)}")
        return cls(**config_dict)

    def to_dict(self) -> Dict[str, Any]:
        """Convert configuration to dictionary."""
        return {
            'geometry': self.geometry,
            'max_r': self.max_r,
            'term_cap': self.term_cap,
            'seed': self.seed,
            'fd_step': self.fd_step,
            'fd_tol': self.fd_tol,
            'fd_points': self.fd_points,
            'fd_radius': self.fd_radius,
            'workers': self.workers,
            'output': self.output,
            'log_level': self.log_level,
        }

    @property
    def geometry_id(self) -> GeometryId:
        return GeometryId.from_string(self.geometry)

    def with_overrides(self, **overrides: Any) -> 'CommandConfig':
        """Copy with the given non-None fields replaced."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})
