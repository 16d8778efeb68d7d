"""
Structured logging: one JSON object per record on stderr.

stdout is reserved for command output, so ``--output json`` stays
byte-reproducible whatever the log level.
"""

import json
import logging
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from src.domain.interfaces.base import ILogger

ROOT_LOGGER = "polyharm"


class StructuredLogger:
    """
    ILogger over a stdlib logger.

    Keyword arguments become the record's ``context``; ``component`` is
    lifted to a top-level field. ``bind`` returns a logger sharing the same
    handlers whose records always carry the bound fields.
    """

    def __init__(self, name: str, level: str = "WARNING", log_file: Optional[str] = None,
                 bound: Optional[Mapping[str, Any]] = None, _configure: bool = True):
        self.logger = logging.getLogger(name)
        self.bound: Dict[str, Any] = dict(bound or {})
        if _configure:
            self._configure(level, log_file)

    def _configure(self, level: str, log_file: Optional[str]) -> None:
        self.logger.setLevel(getattr(logging, level.upper()))
        self.logger.propagate = False
        for handler in list(self.logger.handlers):
            handler.close()
        self.logger.handlers.clear()

        formatter = StructuredFormatter()
        targets = [logging.StreamHandler(sys.stderr)]
        if log_file:
            Path(log_file).parent.mkdir(parents=True, exist_ok=True)
            targets.append(logging.FileHandler(log_file, encoding='utf-8'))
        for handler in targets:
            handler.setFormatter(formatter)
            self.logger.addHandler(handler)

    def bind(self, **fields: Any) -> 'StructuredLogger':
        return StructuredLogger(self.logger.name, bound={**self.bound, **fields}, _configure=False)

    def debug(self, message: str, **kwargs: Any) -> None:
        self._log(logging.DEBUG, message, kwargs)

    def info(self, message: str, **kwargs: Any) -> None:
        self._log(logging.INFO, message, kwargs)

    def warning(self, message: str, **kwargs: Any) -> None:
        self._log(logging.WARNING, message, kwargs)

    def error(self, message: str, **kwargs: Any) -> None:
        self._log(logging.ERROR, message, kwargs)

    def critical(self, message: str, **kwargs: Any) -> None:
        self._log(logging.CRITICAL, message, kwargs)

    def _log(self, level: int, message: str, fields: Dict[str, Any]) -> None:
        # context is only assembled for records that will be emitted
        if not self.logger.isEnabledFor(level):
            return
        context = {**self.bound, **fields}
        component = context.pop('component', 'unknown')
        self.logger.log(level, message, extra={'context': context, 'component': component})


class StructuredFormatter(logging.Formatter):
    """Renders a record as a single JSON line with sorted keys."""

    def format(self, record: logging.LogRecord) -> str:
        log_data: Dict[str, Any] = {
            'timestamp': datetime.fromtimestamp(record.created, timezone.utc).isoformat(),
            'level': record.levelname,
            'logger': record.name,
            'component': getattr(record, 'component', 'unknown'),
            'message': record.getMessage(),
        }
        context = getattr(record, 'context', None)
        if context:
            log_data['context'] = context
        if record.exc_info:
            log_data['exception'] = self.formatException(record.exc_info)
        # Fractions, GaussianRationals and enums fall back to str
        return json.dumps(log_data, ensure_ascii=False, sort_keys=True, default=str)


class LoggerFactory:
    """Builds loggers under the ``polyharm`` namespace."""

    @staticmethod
    def create_logger(name: str, level: str = "WARNING", log_file: Optional[str] = None) -> ILogger:
        return StructuredLogger(name, level, log_file)

    @staticmethod
    def create_component_logger(component_name: str, base_config: Mapping[str, Any]) -> StructuredLogger:
        """Logger named ``polyharm.<component>``; a file is added only when ``log_dir`` is set."""
        log_dir = base_config.get('log_dir')
        log_file = str(Path(log_dir) / f"{component_name}.log") if log_dir else None
        return StructuredLogger(f"{ROOT_LOGGER}.{component_name}",
                                base_config.get('log_level', 'WARNING'), log_file)
