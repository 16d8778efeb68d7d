"""
Catalog replay - recomputes every catalog case exactly and cross-checks it numerically.
"""

import asyncio
from typing import List, Optional, Sequence

from src.application.services.analysis import harmonicity_degree
from src.application.services.families import build_family
from src.application.services.numeric_check import cross_check, max_error
from src.domain.exceptions import PolyharmonicError, ValidationError
from src.domain.geometry.operators import GeometryId
from src.domain.interfaces.base import DomainService, IExpressionReader, ILogger
from src.domain.models.configuration import CommandConfig
from src.domain.models.entities import CaseOutcome, CatalogCase


def select_cases(cases: Sequence[CatalogCase], only: Optional[str]) -> List[CatalogCase]:
    """Cases of one geometry (``--only sol``) or whose id starts with ``only``."""
    if not only:
        return list(cases)
    try:
        geometry = GeometryId.from_string(only)
    except ValidationError:
        geometry = None
    if geometry is not None:
        return [c for c in cases if c.geometry is geometry]
    return [c for c in cases if c.case_id.startswith(only)]


class CatalogVerifier(DomainService):
    """Runs catalog cases concurrently; outcomes come back ordered by case id."""

    def __init__(self, logger: ILogger, reader: IExpressionReader, config: CommandConfig):
        super().__init__(logger)
        self.reader = reader
        self.config = config

    async def run(self, cases: Sequence[CatalogCase], only: Optional[str] = None) -> List[CaseOutcome]:
        selected = select_cases(cases, only)
        semaphore = asyncio.Semaphore(self.config.workers)
        loop = asyncio.get_running_loop()

        async def run_one(case: CatalogCase) -> CaseOutcome:
            async with semaphore:
                return await loop.run_in_executor(None, self.evaluate_case, case)

        outcomes = await asyncio.gather(*(run_one(case) for case in selected))
        outcomes = sorted(outcomes, key=lambda o: o.case.case_id)

        failed = [o.case.case_id for o in outcomes if not o.passed]
        self.logger.info("Catalog replay finished", component='verifier',
                         cases=len(outcomes), failed=len(failed))
        return outcomes

    def evaluate_case(self, case: CatalogCase) -> CaseOutcome:
        try:
            outcome = self._evaluate(case)
        except PolyharmonicError as e:
            outcome = CaseOutcome(case=case, error=f"{type(e).__name__}: {e}")
        except Exception as e:
            # one broken case must not abort the rest of the replay
            self.logger.error(f"Case evaluation crashed: {e}", component='verifier',
                              case_id=case.case_id, error_type=type(e).__name__)
            outcome = CaseOutcome(case=case, error=f"unexpected {type(e).__name__}: {e}")
        level = self.logger.debug if outcome.passed else self.logger.warning
        level("Case evaluated", component='verifier', case_id=case.case_id,
              passed=outcome.passed, differences=outcome.differences())
        return outcome

    def _evaluate(self, case: CatalogCase) -> CaseOutcome:
        config = self.config
        predicted = status = None
        if case.expression is not None:
            f = self.reader.parse(case.expression, case.geometry)
        else:
            request = self.reader.family_request(case.family, case.params, case.geometry)
            result = build_family(request, config.term_cap)
            if result.geometry is not case.geometry:
                return CaseOutcome(case=case, error=(
                    f"family builds on {result.geometry.value}, case declares {case.geometry.value}"))
            f = result.expr
            predicted, status = result.predicted_degree, result.prediction_status

        report = harmonicity_degree(case.geometry, f, config.max_r, config.term_cap)

        numeric_error = numeric_passed = None
        if case.crosscheck:
            reports = cross_check(case.geometry, f, config.fd_points, config.fd_step, config.fd_tol,
                                  config.seed, config.fd_radius, config.term_cap)
            numeric_error = max_error(reports)
            numeric_passed = all(r.passed for r in reports)

        return CaseOutcome(case=case, computed_degree=report.degree, computed_proper=report.proper,
                           predicted_degree=predicted, prediction_status=status,
                           numeric_max_error=numeric_error, numeric_passed=numeric_passed)
