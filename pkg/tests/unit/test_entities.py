"""
Unit tests for domain entities.
"""

import pytest

from src.domain.exceptions import CatalogError, InvalidPoint
from src.domain.geometry.operators import GeometryId
from src.domain.models.entities import (
    BoundaryCheck, CaseOutcome, CatalogCase, CheckReport, DegreeReport, EvalPoint,
    PredictionStatus
)


def _case(**overrides):
    record = {"id": "sol-xy", "geometry": "sol", "citation": "x y is harmonic",
              "expected_degree": 1, "expression": "x*y"}
    record.update(overrides)
    return CatalogCase.from_dict(record)


class TestDegreeReport:
    """Test DegreeReport invariants."""

    def test_chain_length_matches_degree(self):
        report = DegreeReport(degree=2, max_r=10, proper=True, chain=(5, 2))
        assert not report.exceeded
        assert report.describe() == "2"

    def test_chain_length_mismatch(self):
        with pytest.raises(ValueError, match="chain length"):
            DegreeReport(degree=2, max_r=10, proper=True, chain=(5,))

    def test_exceeded(self):
        report = DegreeReport(degree=None, max_r=2, proper=False, chain=(1, 1))
        assert report.exceeded
        assert report.describe() == "Exceeded(2)"


class TestEvalPoint:
    """Test admissibility of evaluation points."""

    def test_disc_for_h2xr(self):
        EvalPoint(0.5, 0.5, 3.0).validate_for(GeometryId.H2XR)
        with pytest.raises(InvalidPoint):
            EvalPoint(1.0, 0.0, 0.0).validate_for(GeometryId.H2XR)

    def test_y_bound_for_sl2(self):
        EvalPoint(0.0, -0.2, 0.0).validate_for(GeometryId.SL2R)
        with pytest.raises(InvalidPoint):
            EvalPoint(0.0, 0.1, 0.0).validate_for(GeometryId.SL2R)

    def test_everything_is_admissible_on_sol(self):
        EvalPoint(10.0, 0.0, -10.0).validate_for(GeometryId.SOL)


class TestSmallReports:
    """Test pass/fail properties."""

    def test_check_report(self):
        point = EvalPoint(0.0, 0.0, 0.0)
        assert CheckReport(point, 1 + 0j, 1 + 0j, 0.0, 1e-6).passed
        assert not CheckReport(point, 1 + 0j, 2 + 0j, 0.5, 1e-6).passed

    def test_boundary_check(self):
        assert BoundaryCheck(2, 4, True, True).passed
        assert not BoundaryCheck(2, 4, True, False, ("row 0",)).passed


class TestCatalogCase:
    """Test catalog record validation."""

    def test_from_dict_defaults(self):
        case = _case()
        assert case.geometry is GeometryId.SOL
        assert case.expected_proper
        assert case.crosscheck

    def test_citation_is_mandatory(self):
        with pytest.raises(CatalogError, match="citation"):
            _case(citation="  ")

    def test_exactly_one_source(self):
        with pytest.raises(CatalogError, match="exactly one"):
            _case(family={"id": "sol-poly", "params": {"m": 1, "n": 1}})
        with pytest.raises(CatalogError, match="exactly one"):
            _case(expression=None)

    def test_malformed_record(self):
        with pytest.raises(CatalogError, match="malformed"):
            CatalogCase.from_dict({"id": "x", "geometry": "sol", "citation": "c"})

    def test_unknown_geometry(self):
        with pytest.raises(CatalogError):
            _case(geometry="euclid")


class TestCaseOutcome:
    """Test expectation comparison."""

    def test_matching_outcome(self):
        outcome = CaseOutcome(case=_case(), computed_degree=1, computed_proper=True, numeric_passed=True)
        assert outcome.passed
        assert outcome.differences() == []

    def test_error_outcome(self):
        outcome = CaseOutcome(case=_case(), error="ParseError: bad")
        assert outcome.differences() == ["error: ParseError: bad"]

    def test_exceeded_degree(self):
        outcome = CaseOutcome(case=_case(), computed_degree=None, computed_proper=True)
        assert outcome.differences() == ["degree: expected 1, computed Exceeded"]

    def test_certified_prediction_must_match(self):
        outcome = CaseOutcome(case=_case(), computed_degree=1, computed_proper=True,
                              predicted_degree=2, prediction_status=PredictionStatus.CERTIFIED)
        assert outcome.differences() == ["certified prediction 2 not met"]

    def test_upper_bound_may_not_be_exceeded(self):
        case = _case(expected_degree=3)
        within = CaseOutcome(case=case, computed_degree=3, computed_proper=True,
                             predicted_degree=4, prediction_status=PredictionStatus.UPPER_BOUND)
        beyond = CaseOutcome(case=case, computed_degree=3, computed_proper=True,
                             predicted_degree=2, prediction_status=PredictionStatus.UPPER_BOUND)
        assert within.passed
        assert beyond.differences() == ["upper bound 2 exceeded"]

    def test_source_inconsistency_is_not_a_failure(self):
        outcome = CaseOutcome(case=_case(), computed_degree=1, computed_proper=True,
                              predicted_degree=1, prediction_status=PredictionStatus.INCONSISTENT)
        assert outcome.passed

    def test_numeric_failure(self):
        outcome = CaseOutcome(case=_case(), computed_degree=1, computed_proper=True,
                              numeric_passed=False, numeric_max_error=0.25)
        assert outcome.differences() == ["numeric cross-check failed (max rel error 2.500e-01)"]
