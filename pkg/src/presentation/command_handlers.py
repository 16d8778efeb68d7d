"""
Command-line front end.

Every command prints its result on stdout (text or json) and reports
failures on stderr with a distinct exit code:

    0 ok, 1 verification failure, 2 parse or input error, 3 term cap,
    4 degree cap, 5 constructor error, 6 numeric tolerance
"""

import asyncio
import json
import os
from dataclasses import dataclass
from typing import Annotated, Any, Callable, Dict, List, Optional

import typer

from src.application.services.analysis import HarmonicityAnalyzer
from src.application.services.catalog_verifier import CatalogVerifier
from src.application.services.families import FAMILY_BUILDERS, build_family
from src.application.services.numeric_check import NumericOracle, max_error
from src.domain.algebra.expression import Expression
from src.domain.exceptions import ValidationError
from src.domain.geometry.operators import GeometryId, iterate_tau, kappa
from src.domain.interfaces.base import ILogger
from src.domain.models.configuration import LOG_LEVELS, CommandConfig
from src.domain.models.entities import (
    CaseOutcome, CheckReport, DegreeReport, FamilyResult, PredictionStatus
)
from src.infrastructure.catalog.repository import CatalogRepository
from src.infrastructure.configuration.manager import ConfigurationManager
from src.infrastructure.error_handling.handler import (
    EXIT_DEGREE_CAP, EXIT_FAILURE, EXIT_NUMERIC, EXIT_OK, ErrorHandler
)
from src.infrastructure.logging.logger import LoggerFactory
from src.infrastructure.textio.parser import ExpressionReader
from src.infrastructure.textio.renderer import (
    SCHEMA_VERSION, RenderFormat, render_for, to_json_dict
)

app = typer.Typer(
    name="polyharm",
    help="Exact polyharmonic functions on Sol, Nil, SL2~, H2xR and S2xR.",
    no_args_is_help=True,
    add_completion=False,
)

GeometryOption = Annotated[Optional[str], typer.Option("--geometry", "-g", help="sol, nil, sl2, h2xr or s2xr")]
MaxROption = Annotated[Optional[int], typer.Option("--max-r", help="Degree cap for tau iteration")]
TermCapOption = Annotated[Optional[int], typer.Option("--term-cap", help="Maximum number of terms per expression")]
SeedOption = Annotated[Optional[int], typer.Option("--seed", help="Seed for numeric sample points")]
OutputOption = Annotated[Optional[str], typer.Option("--output", "-o", help="text or json")]
FdStepOption = Annotated[Optional[float], typer.Option("--fd-step", help="Finite-difference step")]
FdTolOption = Annotated[Optional[float], typer.Option("--fd-tol", help="Relative tolerance of the numeric check")]
ConfigOption = Annotated[Optional[str], typer.Option("--config", help="JSON configuration file")]
LogLevelOption = Annotated[Optional[str], typer.Option("--log-level", help="DEBUG, INFO, WARNING, ERROR")]


@dataclass
class CommandContext:
    """Services wired for one command invocation."""

    config: CommandConfig
    logger: ILogger
    error_handler: ErrorHandler
    reader: ExpressionReader

    @property
    def geometry(self) -> GeometryId:
        return self.config.geometry_id

    @property
    def json_output(self) -> bool:
        return self.config.output == "json"

    def parse(self, text: str) -> Expression:
        return self.reader.parse(text, self.geometry)

    def render(self, f: Expression, geometry: Optional[GeometryId] = None) -> str:
        return render_for(f, RenderFormat.CANONICAL, geometry or self.geometry)


def _bootstrap_level(flag: Optional[str]) -> str:
    level = (flag or os.getenv('POLYHARM_LOG_LEVEL') or "WARNING").upper()
    return level if level in LOG_LEVELS else "WARNING"


def _run(body: Callable[[CommandContext], int], config_path: Optional[str] = None,
         **overrides: Any) -> None:
    """Build the context, run ``body`` and turn its result or error into an exit code."""
    logger = LoggerFactory.create_component_logger('cli', {'log_level': _bootstrap_level(overrides.get('log_level'))})
    error_handler = ErrorHandler(logger)
    try:
        if overrides.get('log_level'):
            overrides['log_level'] = overrides['log_level'].upper()
        config = ConfigurationManager(config_path, logger).get_command_config(**overrides)
        logger = LoggerFactory.create_component_logger('cli', {'log_level': config.log_level}).bind(
            command=body.__name__)
        error_handler = ErrorHandler(logger)
        context = CommandContext(config, logger, error_handler, ExpressionReader(config.term_cap))
        code = body(context)
    except typer.Exit:
        raise
    except Exception as e:
        typer.echo(error_handler.handle_error(e, {'command': body.__name__}), err=True)
        raise typer.Exit(error_handler.exit_code_for(e))
    raise typer.Exit(code)


def _emit_json(payload: Dict[str, Any]) -> None:
    typer.echo(json.dumps({"schema_version": SCHEMA_VERSION, **payload}, sort_keys=True, indent=2))


def _degree_payload(report: DegreeReport) -> Dict[str, Any]:
    return {
        "degree": report.degree,
        "exceeded": report.exceeded,
        "max_r": report.max_r,
        "proper": report.proper,
        "chain": list(report.chain),
    }


# Commands

@app.command()
def tau(
    expression: Annotated[str, typer.Argument(help="Expression in x, y, t (or z, zc, t)")],
    iterate: Annotated[int, typer.Option("--iterate", "-n", min=1, help="Number of applications")] = 1,
    geometry: GeometryOption = None,
    term_cap: TermCapOption = None,
    output: OutputOption = None,
    config: ConfigOption = None,
    log_level: LogLevelOption = None,
) -> None:
    """Apply the Laplace-Beltrami operator tau."""

    def run_tau(ctx: CommandContext) -> int:
        result = iterate_tau(ctx.geometry, ctx.parse(expression), iterate, ctx.config.term_cap)
        if ctx.json_output:
            _emit_json({"command": "tau", "geometry": ctx.geometry.value, "iterate": iterate,
                        "canonical": ctx.render(result), "result": to_json_dict(result)})
        else:
            typer.echo(ctx.render(result))
        return EXIT_OK

    _run(run_tau, config, geometry=geometry, term_cap=term_cap, output=output, log_level=log_level)


@app.command("kappa")
def kappa_command(
    first: Annotated[str, typer.Argument(help="First expression")],
    second: Annotated[str, typer.Argument(help="Second expression")],
    geometry: GeometryOption = None,
    term_cap: TermCapOption = None,
    output: OutputOption = None,
    config: ConfigOption = None,
    log_level: LogLevelOption = None,
) -> None:
    """Apply the conformality operator kappa to a pair of functions."""

    def run_kappa(ctx: CommandContext) -> int:
        result = kappa(ctx.geometry, ctx.parse(first), ctx.parse(second), ctx.config.term_cap)
        if ctx.json_output:
            _emit_json({"command": "kappa", "geometry": ctx.geometry.value,
                        "canonical": ctx.render(result), "result": to_json_dict(result)})
        else:
            typer.echo(ctx.render(result))
        return EXIT_OK

    _run(run_kappa, config, geometry=geometry, term_cap=term_cap, output=output, log_level=log_level)


@app.command()
def degree(
    expression: Annotated[str, typer.Argument(help="Expression in x, y, t (or z, zc, t)")],
    geometry: GeometryOption = None,
    max_r: MaxROption = None,
    term_cap: TermCapOption = None,
    output: OutputOption = None,
    config: ConfigOption = None,
    log_level: LogLevelOption = None,
) -> None:
    """Smallest r with tau^r(f) = 0."""

    def run_degree(ctx: CommandContext) -> int:
        analyzer = HarmonicityAnalyzer(ctx.logger, ctx.config.max_r, ctx.config.term_cap)
        report = analyzer.degree(ctx.geometry, ctx.parse(expression))
        if ctx.json_output:
            _emit_json({"command": "degree", "geometry": ctx.geometry.value, **_degree_payload(report)})
        else:
            typer.echo(f"degree: {report.describe()}")
            typer.echo(f"proper: {str(report.proper).lower()}")
            typer.echo(f"chain: {' '.join(str(c) for c in report.chain)}")
        return EXIT_DEGREE_CAP if report.exceeded else EXIT_OK

    _run(run_degree, config, geometry=geometry, max_r=max_r, term_cap=term_cap,
         output=output, log_level=log_level)


def _family_text(ctx: CommandContext, result: FamilyResult) -> List[str]:
    lines = [
        f"family: {result.family_id}",
        f"geometry: {result.geometry.value}",
        f"expression: {ctx.render(result.expr, result.geometry)}",
        f"predicted_degree: {result.predicted_degree}",
        f"prediction_status: {result.prediction_status.value}",
        f"source: {result.prediction_source}",
    ]
    lines.extend(f"note: {note}" for note in result.notes)
    return lines


@app.command()
def family(
    family_id: Annotated[str, typer.Argument(help=f"One of: {', '.join(FAMILY_BUILDERS)}")],
    m: Annotated[Optional[int], typer.Option("-m", help="Power of x")] = None,
    n: Annotated[Optional[int], typer.Option("-n", help="Power of y, or the harmonic family order")] = None,
    r: Annotated[Optional[int], typer.Option("-r", help="Target degree")] = None,
    d: Annotated[Optional[int], typer.Option("-d", help="Power of x in the Nil product family")] = None,
    alpha: Annotated[Optional[int], typer.Option("--alpha", help="Power of t")] = None,
    axis: Annotated[Optional[str], typer.Option("--axis", help="y-major/x-major (Sol), x/y/t (SL2~)")] = None,
    linear_factor: Annotated[Optional[bool], typer.Option("--linear-factor/--no-linear-factor")] = None,
    strict: Annotated[Optional[bool], typer.Option("--strict/--no-strict")] = None,
    a: Annotated[Optional[str], typer.Option("--a", help="Comma-separated coefficients")] = None,
    b: Annotated[Optional[str], typer.Option("--b", help="Comma-separated coefficients")] = None,
    p: Annotated[Optional[str], typer.Option("--p", help="Ascending coefficients of P(t)")] = None,
    f: Annotated[Optional[str], typer.Option("--f", help="Ascending coefficients of f(z)")] = None,
    g: Annotated[Optional[str], typer.Option("--g", help="Ascending coefficients of g(zbar)")] = None,
    h1: Annotated[Optional[str], typer.Option("--h1", help="Planar harmonic seed in x, y")] = None,
    poly: Annotated[Optional[str], typer.Option("--poly", help="Polynomial in t")] = None,
    f_expr: Annotated[Optional[str], typer.Option("--f-expr", help="Holomorphic part in z")] = None,
    g_expr: Annotated[Optional[str], typer.Option("--g-expr", help="Antiholomorphic part in zc")] = None,
    certify: Annotated[bool, typer.Option("--certify", help="Also compute the exact degree")] = False,
    geometry: GeometryOption = None,
    max_r: MaxROption = None,
    term_cap: TermCapOption = None,
    output: OutputOption = None,
    config: ConfigOption = None,
    log_level: LogLevelOption = None,
) -> None:
    """Construct a member of an explicit family."""
    raw = {'m': m, 'n': n, 'r': r, 'd': d, 'alpha': alpha, 'axis': axis,
           'linear_factor': linear_factor, 'strict': strict, 'a': a, 'b': b, 'p': p,
           'f': f, 'g': g, 'h1': h1, 'poly': poly, 'f_expr': f_expr, 'g_expr': g_expr}
    params = {key: value for key, value in raw.items() if value is not None}

    def run_family(ctx: CommandContext) -> int:
        request = ctx.reader.family_request(family_id, params, ctx.geometry if geometry else None)
        result = build_family(request, ctx.config.term_cap)
        ctx.logger.info("family built", component='cli', family=family_id, terms=result.expr.term_count)

        report = None
        code = EXIT_OK
        if certify:
            analyzer = HarmonicityAnalyzer(ctx.logger, ctx.config.max_r, ctx.config.term_cap)
            report = analyzer.degree(result.geometry, result.expr)
            if report.exceeded:
                code = EXIT_DEGREE_CAP
            elif result.prediction_status is PredictionStatus.CERTIFIED and report.degree != result.predicted_degree:
                code = EXIT_FAILURE

        if ctx.json_output:
            payload = {
                "command": "family",
                "family": result.family_id,
                "geometry": result.geometry.value,
                "canonical": ctx.render(result.expr, result.geometry),
                "expression": to_json_dict(result.expr),
                "predicted_degree": result.predicted_degree,
                "prediction_status": result.prediction_status.value,
                "prediction_source": result.prediction_source,
                "notes": list(result.notes),
            }
            if report is not None:
                payload["certified"] = _degree_payload(report)
            _emit_json(payload)
        else:
            for line in _family_text(ctx, result):
                typer.echo(line)
            if report is not None:
                typer.echo(f"degree: {report.describe()}")
                typer.echo(f"proper: {str(report.proper).lower()}")
        return code

    _run(run_family, config, geometry=geometry, max_r=max_r, term_cap=term_cap,
         output=output, log_level=log_level)


def _outcome_payload(outcome: CaseOutcome) -> Dict[str, Any]:
    case = outcome.case
    return {
        "id": case.case_id,
        "geometry": case.geometry.value,
        "citation": case.citation,
        "expected_degree": case.expected_degree,
        "expected_proper": case.expected_proper,
        "computed_degree": outcome.computed_degree,
        "computed_proper": outcome.computed_proper,
        "predicted_degree": outcome.predicted_degree,
        "prediction_status": outcome.prediction_status.value if outcome.prediction_status else None,
        "numeric_max_error": outcome.numeric_max_error,
        "numeric_passed": outcome.numeric_passed,
        "passed": outcome.passed,
        "differences": outcome.differences(),
    }


def _outcome_row(outcome: CaseOutcome) -> str:
    computed = "-" if outcome.error else (
        "Exceeded" if outcome.computed_degree is None else str(outcome.computed_degree))
    status = "PASS" if outcome.passed else "FAIL"
    return (f"{outcome.case.case_id:<28} {outcome.case.geometry.value:<5} "
            f"{outcome.case.expected_degree:>8} {computed:>8}  {status}  {outcome.case.citation}")


@app.command("verify-paper")
def verify_paper(
    only: Annotated[Optional[str], typer.Option("--only", help="Geometry name or case id prefix")] = None,
    catalog: Annotated[Optional[str], typer.Option("--catalog", help="Catalog JSON file")] = None,
    workers: Annotated[Optional[int], typer.Option("--workers", help="Concurrent cases")] = None,
    max_r: MaxROption = None,
    term_cap: TermCapOption = None,
    seed: SeedOption = None,
    fd_step: FdStepOption = None,
    fd_tol: FdTolOption = None,
    output: OutputOption = None,
    config: ConfigOption = None,
    log_level: LogLevelOption = None,
) -> None:
    """Replay the example catalog exactly and numerically."""

    def run_verify(ctx: CommandContext) -> int:
        async def replay() -> List[CaseOutcome]:
            cases = await CatalogRepository(ctx.logger).load(catalog)
            verifier = CatalogVerifier(ctx.logger, ctx.reader, ctx.config)
            return await verifier.run(cases, only)

        outcomes = asyncio.run(replay())
        if not outcomes:
            raise ValidationError(f"no catalog case matches {only!r}", field='only', value=only)
        failed = [o.case.case_id for o in outcomes if not o.passed]

        if ctx.json_output:
            _emit_json({"command": "verify-paper", "cases": [_outcome_payload(o) for o in outcomes],
                        "passed": not failed, "failed": failed})
        else:
            typer.echo(f"{'CASE':<28} {'GEOM':<5} {'EXPECTED':>8} {'COMPUTED':>8}  STATUS  CITATION")
            for outcome in outcomes:
                typer.echo(_outcome_row(outcome))
                for difference in outcome.differences():
                    typer.echo(f"    {difference}")
            typer.echo(f"{len(outcomes) - len(failed)}/{len(outcomes)} cases passed")
            if failed:
                typer.echo(f"failing: {', '.join(failed)}")
        return EXIT_FAILURE if failed else EXIT_OK

    _run(run_verify, config, max_r=max_r, term_cap=term_cap, seed=seed, fd_step=fd_step,
         fd_tol=fd_tol, workers=workers, output=output, log_level=log_level)


def _complex_pair(value: complex) -> List[float]:
    return [value.real, value.imag]


def _report_payload(report: CheckReport) -> Dict[str, Any]:
    return {
        "point": list(report.point.as_tuple()),
        "symbolic": _complex_pair(report.symbolic),
        "numeric": _complex_pair(report.numeric),
        "rel_error": report.rel_error,
        "passed": report.passed,
    }


@app.command()
def crosscheck(
    expression: Annotated[str, typer.Argument(help="Expression in x, y, t (or z, zc, t)")],
    points: Annotated[Optional[int], typer.Option("--points", help="Number of sample points")] = None,
    radius: Annotated[Optional[float], typer.Option("--radius", help="Sampling box radius")] = None,
    geometry: GeometryOption = None,
    term_cap: TermCapOption = None,
    seed: SeedOption = None,
    fd_step: FdStepOption = None,
    fd_tol: FdTolOption = None,
    output: OutputOption = None,
    config: ConfigOption = None,
    log_level: LogLevelOption = None,
) -> None:
    """Compare exact tau with a finite-difference stencil at sample points."""

    def run_crosscheck(ctx: CommandContext) -> int:
        cfg = ctx.config
        oracle = NumericOracle(ctx.logger, cfg.fd_points, cfg.fd_step, cfg.fd_tol,
                               cfg.seed, cfg.fd_radius, cfg.term_cap)
        reports = oracle.check(ctx.geometry, ctx.parse(expression))
        passed = all(r.passed for r in reports)
        if ctx.json_output:
            _emit_json({"command": "crosscheck", "geometry": ctx.geometry.value,
                        "tolerance": cfg.fd_tol, "step": cfg.fd_step, "seed": cfg.seed,
                        "max_rel_error": max_error(reports), "passed": passed,
                        "points": [_report_payload(r) for r in reports]})
        else:
            typer.echo(f"{'x':>10} {'y':>10} {'t':>10} {'rel_error':>12}  STATUS")
            for report in reports:
                x, y, t = report.point.as_tuple()
                status = "PASS" if report.passed else "FAIL"
                typer.echo(f"{x:>10.6f} {y:>10.6f} {t:>10.6f} {report.rel_error:>12.3e}  {status}")
            typer.echo(f"max rel error {max_error(reports):.3e}, tolerance {cfg.fd_tol:.1e}: "
                       f"{'PASS' if passed else 'FAIL'}")
        return EXIT_OK if passed else EXIT_NUMERIC

    _run(run_crosscheck, config, geometry=geometry, term_cap=term_cap, seed=seed,
         fd_step=fd_step, fd_tol=fd_tol, fd_points=points, fd_radius=radius,
         output=output, log_level=log_level)
