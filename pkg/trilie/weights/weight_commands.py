from typing import Annotated

import typer

from ..algebras.algebra_files import AlgebraInput
from ..algebras.algebra_models import BlocksNotValid
from ..algebras.algebra_ops import coordinate_block
from ..app import app, settings
from ..dependencies.loaders import parse_torus
from ..dependencies.runner import FormatOption, OutputFormat, TorusOption, run_on_algebra
from ..exceptions import InvalidTorusError
from ..maps.map_spaces import AlgebraSpaces
from ..reports.report_models import CheckResult
from .weight_checks import check_sum_decomposable, structure_checks
from .weight_models import Torus
from .weight_ops import require_valid_torus, validate_torus


def resolve_torus(loaded: AlgebraInput, torus_text: str | None) -> Torus | None:
    if torus_text:
        return Torus(parse_torus(torus_text, loaded.algebra))
    if loaded.torus is not None:
        return Torus(loaded.torus)
    return None


def weight_section(sp: AlgebraSpaces, torus: Torus) -> tuple[dict, list[CheckResult]]:
    checks = validate_torus(sp.algebra, torus)
    if not all(c.passed for c in checks):
        require_valid_torus(sp.algebra, torus)
    more, result = structure_checks(sp.algebra, torus, sp)
    return result, checks + more


def decomposable_section(sp: AlgebraSpaces, loaded: AlgebraInput) -> tuple[dict, list[CheckResult]]:
    if not loaded.blocks:
        return {}, []
    n = sp.algebra.dim
    try:
        checks, result = check_sum_decomposable(sp.algebra, [coordinate_block(n, b) for b in loaded.blocks], sp)
    except BlocksNotValid as e:
        check = CheckResult(name="decomposable: blocks form a direct sum of ideals", passed=False, detail=e.detail)
        return {"blocks": f"not valid: {e.detail}"}, [check]
    return result, checks


@app.command("weights")
def weights(source: Annotated[str, typer.Argument(help="Algebra file or catalog:NAME.")],
            torus_text: TorusOption = None,
            output_format: FormatOption = OutputFormat(settings.format)):
    """Root decomposition and the weight decompositions of QDer and QΓ relative to a torus."""

    def build(loaded: AlgebraInput):
        torus = resolve_torus(loaded, torus_text)
        if torus is None:
            raise InvalidTorusError(f"{loaded.algebra.name}: no torus given and none in the algebra file")
        sp = AlgebraSpaces(loaded.algebra)
        result, checks = weight_section(sp, torus)
        extra, more = decomposable_section(sp, loaded)
        if extra:
            result["decomposable"] = extra
        return result, checks + more

    run_on_algebra("weights", source, build, output_format)
