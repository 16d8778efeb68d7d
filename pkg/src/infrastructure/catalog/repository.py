"""
Catalog repository - reads the checked-in example catalog.

File format (JSON)::

    {
      "schema_version": 1,
      "cases": [
        {"id": "...", "geometry": "sol", "citation": "...",
         "expected_degree": 2, "expected_proper": true,
         "expression": "..."}                       # or
        {..., "family": {"id": "sol-poly", "params": {"m": 4, "n": 4}},
         "crosscheck": false}
      ]
    }
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional

import aiofiles

from src.domain.exceptions import CatalogError
from src.domain.interfaces.base import ILogger
from src.domain.models.entities import CatalogCase

CATALOG_SCHEMA_VERSION = 1
DEFAULT_CATALOG_PATH = Path(__file__).resolve().parents[3] / "data" / "catalog.json"


def parse_catalog(data: Any) -> List[CatalogCase]:
    """Validate decoded catalog JSON; ids must be unique."""
    if not isinstance(data, dict) or not isinstance(data.get('cases'), list):
        raise CatalogError("catalog must be an object with a 'cases' list")
    version = data.get('schema_version')
    if version != CATALOG_SCHEMA_VERSION:
        raise CatalogError(f"unsupported catalog schema_version {version!r}")

    cases: List[CatalogCase] = []
    seen: Dict[str, int] = {}
    for position, record in enumerate(data['cases']):
        if not isinstance(record, dict):
            raise CatalogError(f"catalog record {position} is not an object")
        case = CatalogCase.from_dict(record)
        if case.case_id in seen:
            raise CatalogError("duplicate case id", case_id=case.case_id,
                               context={'first': seen[case.case_id], 'second': position})
        seen[case.case_id] = position
        cases.append(case)
    return cases


class CatalogRepository:
    """Loads catalog cases asynchronously from a JSON file."""

    def __init__(self, logger: ILogger, default_path: Optional[str] = None):
        self.logger = logger
        self.default_path = Path(default_path) if default_path else DEFAULT_CATALOG_PATH

    async def load(self, path: Optional[str] = None) -> List[CatalogCase]:
        catalog_path = Path(path) if path else self.default_path
        try:
            async with aiofiles.open(catalog_path, 'r', encoding='utf-8') as f:
                content = await f.read()
        except OSError as e:
            raise CatalogError(f"cannot read catalog {catalog_path}: {e}")

        try:
            data = json.loads(content)
        except json.JSONDecodeError as e:
            raise CatalogError(f"invalid JSON in catalog {catalog_path}: {e}")

        cases = parse_catalog(data)
        self.logger.info("Catalog loaded", component='catalog',
                         path=str(catalog_path), cases=len(cases))
        return cases
