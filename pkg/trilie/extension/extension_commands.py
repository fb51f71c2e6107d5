import logging
from typing import Annotated

import typer

from ..algebras.algebra_files import AlgebraInput
from ..app import app, settings
from ..dependencies.runner import FormatOption, OutputFormat, run_on_algebra
from ..maps.map_spaces import AlgebraSpaces
from ..reports.report_models import CheckResult
from .extension_ops import embedding_checks, extend, semidirect_checks

log = logging.getLogger(__name__)


def extension_section(sp: AlgebraSpaces, max_extension_dim: int) -> tuple[dict, list[CheckResult]]:
    """Embedding checks always; the Der(Ã) splitting for a centerless base within the size cap."""
    a = sp.algebra
    e = extend(a)
    result = {"extension_dim": e.algebra.dim, "qder": sp.qder.dim, "qder_pairs": sp.qder_pairs.dim}
    checks = embedding_checks(e, sp)
    if sp.center.dim != 0:
        result["semidirect"] = f"not applicable: Z({a.name}) has dimension {sp.center.dim}"
    elif e.algebra.dim > max_extension_dim:
        log.warning("skipping Der(%s) splitting: dimension %d above %d", e.algebra.name, e.algebra.dim, max_extension_dim)
        result["semidirect"] = f"skipped: extension dimension {e.algebra.dim} above {max_extension_dim}"
    else:
        more, dims = semidirect_checks(e, sp)
        checks += more
        result["semidirect"] = dims
    return result, checks


@app.command("extend")
def extend_command(source: Annotated[str, typer.Argument(help="Algebra file or catalog:NAME.")],
                   max_extension_dim: Annotated[int, typer.Option(
                       "--max-extension-dim", help="Largest extension dimension for the Der(Ã) splitting.")]
                   = settings.max_extension_dim,
                   output_format: FormatOption = OutputFormat(settings.format)):
    """Build Ã = A ⊗ tF[t]/(t^4) and check how quasiderivations embed as derivations."""

    def build(loaded: AlgebraInput):
        return extension_section(AlgebraSpaces(loaded.algebra), max_extension_dim)

    run_on_algebra("extend", source, build, output_format)
