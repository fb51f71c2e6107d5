from typing import Annotated, Optional

import typer

from ..app import app, settings
from ..dependencies.runner import FormatOption, OutputFormat, run_on_algebra, run_report
from ..reports.report_models import CheckResult
from ..reports.report_render import encode_subspace
from .algebra_catalog import catalog_document, catalog_names
from .algebra_files import AlgebraInput
from .algebra_models import BlocksNotValid
from .algebra_ops import center, coordinate_block, derived_algebra, validate_blocks


def block_checks(loaded: AlgebraInput) -> list[CheckResult]:
    if not loaded.blocks:
        return []
    a = loaded.algebra
    try:
        validate_blocks(a, [coordinate_block(a.dim, b) for b in loaded.blocks])
    except BlocksNotValid as e:
        return [CheckResult(name="blocks: ideals with zero mixed brackets spanning A", passed=False, detail=e.detail)]
    return [CheckResult(name="blocks: ideals with zero mixed brackets spanning A", passed=True,
                        detail=f"{len(loaded.blocks)} blocks")]


def _check(loaded: AlgebraInput) -> tuple[dict, list[CheckResult]]:
    a = loaded.algebra
    result = {
        "name": a.name,
        "dim": a.dim,
        "labels": list(a.labels),
        "structure_constants": len(a.constants),
        "abelian": a.is_abelian,
        "center": encode_subspace(center(a)),
        "derived_algebra": encode_subspace(derived_algebra(a)),
        "has_torus": loaded.torus is not None,
    }
    checks = [CheckResult(name="algebra: fundamental identity on all basis 5-tuples", passed=True,
                          detail=f"dimension {a.dim}")]
    return result, checks + block_checks(loaded)


@app.command("check")
def check(source: Annotated[str, typer.Argument(help="Algebra file or catalog:NAME.")],
          output_format: FormatOption = OutputFormat(settings.format)):
    """Validate a structure-constant file: skew storage, shape and the fundamental identity."""
    run_on_algebra("check", source, _check, output_format)


@app.command("catalog")
def catalog(name: Annotated[Optional[str], typer.Argument(help="Catalog name, e.g. A3 or abelian(4).")] = None,
            output_format: FormatOption = OutputFormat(settings.format)):
    """List the built-in algebras, or print one as an algebra document."""
    if name is None:
        run_report("catalog", "catalog", lambda: ({"algebras": catalog_names()}, []), output_format)
    else:
        run_report("catalog", f"catalog:{name}",
                   lambda: (catalog_document(name).model_dump(mode="json", exclude_none=True), []), output_format)
