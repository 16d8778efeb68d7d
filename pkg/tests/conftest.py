"""
Pytest configuration and shared fixtures.
"""

import json
import pytest
import tempfile
import shutil
from pathlib import Path
from typing import Dict, Any
from unittest.mock import Mock

from src.domain.models.configuration import CommandConfig
from src.domain.interfaces.base import ILogger
from src.infrastructure.textio.parser import ExpressionReader


@pytest.fixture
def temp_dir():
    """Create a temporary directory for tests."""
    temp_path = tempfile.mkdtemp()
    yield Path(temp_path)
    shutil.rmtree(temp_path, ignore_errors=True)


@pytest.fixture
def mock_logger():
    """Create a mock logger for testing."""
    logger = Mock(spec=ILogger)
    logger.debug = Mock()
    logger.info = Mock()
    logger.warning = Mock()
    logger.error = Mock()
    logger.critical = Mock()
    return logger


@pytest.fixture
def default_config():
    """Default command configuration."""
    return CommandConfig()


@pytest.fixture
def fast_config():
    """Configuration with few sample points for quicker numeric checks."""
    return CommandConfig(fd_points=3, workers=2)


@pytest.fixture
def reader():
    """Expression reader with the default term cap."""
    return ExpressionReader()


@pytest.fixture
def sample_catalog_dict() -> Dict[str, Any]:
    """A small catalog covering one expression case and one family case."""
    return {
        "schema_version": 1,
        "cases": [
            {
                "id": "sol-f24",
                "geometry": "sol",
                "citation": "Sol biharmonic example f_{2,4}",
                "expected_degree": 2,
                "expected_proper": True,
                "expression": "x^2*y^4 + 3/8*exp(4*t)*x^2 - 1/2*exp(-2*t)*y^4 + (21/16 - 3*x^2*y^2)*exp(2*t)",
            },
            {
                "id": "nil-monomial-1-2-1",
                "geometry": "nil",
                "citation": "Nil monomial x y^2 t",
                "expected_degree": 3,
                "expected_proper": True,
                "family": {"id": "nil-monomial", "params": {"m": 1, "n": 2, "alpha": 1}},
            },
        ],
    }


@pytest.fixture
def sample_catalog_file(temp_dir, sample_catalog_dict):
    """The small catalog written to disk."""
    path = temp_dir / "catalog.json"
    path.write_text(json.dumps(sample_catalog_dict), encoding="utf-8")
    return path
