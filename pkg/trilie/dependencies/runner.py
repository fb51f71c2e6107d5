import logging
import time
from enum import Enum
from typing import Annotated, Callable, Optional

import typer
from rich.console import Console

from ..algebras.algebra_files import AlgebraInput
from ..exceptions import TrilieError
from ..reports.report_models import CheckResult, Report
from ..reports.report_render import render_structured, render_text
from .loaders import load_algebra

log = logging.getLogger(__name__)

Build = Callable[[AlgebraInput], tuple[dict, list[CheckResult]]]


class OutputFormat(str, Enum):
    text = "text"
    structured = "structured"


def emit(report: Report, output_format: OutputFormat) -> None:
    if output_format is OutputFormat.structured:
        typer.echo(render_structured(report).decode())
    else:
        render_text(report, Console())


def fail(error: TrilieError):
    """Log the error detail and leave with its exit code."""
    log.error(error.detail)
    raise typer.Exit(code=error.exit_code)


def run_report(operation: str, algebra_id: str, build: Callable[[], tuple[dict, list[CheckResult]]],
               output_format: OutputFormat) -> Report:
    start = time.perf_counter()
    try:
        result, checks = build()
    except TrilieError as e:
        fail(e)
    report = Report(algebra_id=algebra_id, operation=operation, result=result, checks=checks,
                    elapsed_seconds=round(time.perf_counter() - start, 3))
    log.info("%s(%s): %d checks, %d failed", operation, algebra_id, len(checks), len(report.failures()))
    emit(report, output_format)
    if not report.passed:
        raise typer.Exit(code=1)
    return report


def run_on_algebra(operation: str, source: str, build: Build, output_format: OutputFormat) -> Report:
    """Load the algebra named by source, build the report payload and print it.

    Exit codes follow the error raised; a report with a failed check exits with 1.
    """
    return run_report(operation, source, lambda: build(load_algebra(source)), output_format)


FormatOption = Annotated[OutputFormat, typer.Option("--format", help="Report as rich text or as sorted JSON.")]
SeedOption = Annotated[int, typer.Option("--seed", help="Seed of the random map and 5-tuple samplers.")]
MaxExhaustiveOption = Annotated[int, typer.Option(
    "--max-exhaustive", help="Largest dimension whose basis 5-tuples are all scanned; larger ones are sampled.")]
RandomMapsOption = Annotated[int, typer.Option("--random-maps", help="Random maps in the Ker(μ) audit.")]
TorusOption = Annotated[Optional[str], typer.Option(
    "--torus", help="Torus generators separated by ';', each a basis label, e<k> or comma-separated rationals.")]
