"""
Base interfaces and abstract classes for the domain layer.
"""

from abc import ABC
from typing import Any, Dict, Protocol


class ILogger(Protocol):
    """Logger interface for dependency injection."""

    def debug(self, message: str, **kwargs: Any) -> None: ...
    def info(self, message: str, **kwargs: Any) -> None: ...
    def warning(self, message: str, **kwargs: Any) -> None: ...
    def error(self, message: str, **kwargs: Any) -> None: ...
    def critical(self, message: str, **kwargs: Any) -> None: ...


class IExpressionReader(Protocol):
    """Turns catalog text into expressions and family requests."""

    def parse(self, text: str, geometry: Any) -> Any: ...
    def family_request(self, family_id: str, params: Dict[str, Any], geometry: Any = None) -> Any: ...


class DomainService(ABC):
    """Base class for services that log."""

    def __init__(self, logger: ILogger):
        self.logger = logger
