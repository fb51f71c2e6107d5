from enum import Enum
from typing import Annotated, Optional

import typer

from ..algebras.algebra_files import AlgebraInput
from ..app import app, settings
from ..dependencies.runner import FormatOption, OutputFormat, run_on_algebra
from ..reports.report_models import CheckResult
from ..reports.report_render import encode_map_space, encode_subspace
from .map_checks import closure_checks, decomposition_checks, direct_sum_checks, inclusion_checks, qcentroid_module_checks
from .map_spaces import AlgebraSpaces


class SpaceName(str, Enum):
    der = "der"
    ad = "ad"
    zder = "zder"
    centroid = "centroid"
    qcentroid = "qcentroid"
    qder_pairs = "qder_pairs"
    qder = "qder"
    gder = "gder"


DEFAULT_SPACES = [SpaceName.der, SpaceName.ad, SpaceName.zder, SpaceName.centroid,
                  SpaceName.qcentroid, SpaceName.qder, SpaceName.gder]


def space_dimensions(sp: AlgebraSpaces) -> dict[str, int]:
    return {name.value: sp.by_name(name.value).dim for name in SpaceName}


def space_checks(sp: AlgebraSpaces, blocks=None) -> list[CheckResult]:
    """Every property of the derivation-type spaces that holds for any algebra."""
    checks = closure_checks(sp) + inclusion_checks(sp) + decomposition_checks(sp) + qcentroid_module_checks(sp)
    if blocks:
        checks += direct_sum_checks(sp, blocks)
    return checks


@app.command("spaces")
def spaces(source: Annotated[str, typer.Argument(help="Algebra file or catalog:NAME.")],
           which: Annotated[Optional[list[SpaceName]], typer.Option(
               "--which", help="Space to compute; repeat for several. Defaults to all but qder_pairs.")] = None,
           output_format: FormatOption = OutputFormat(settings.format)):
    """Dimensions and bases of the derivation-type spaces."""
    names = which or DEFAULT_SPACES

    def build(loaded: AlgebraInput):
        sp = AlgebraSpaces(loaded.algebra)
        result = {name.value: encode_map_space(sp.by_name(name.value)) for name in names}
        result["center"] = encode_subspace(sp.center)
        result["derived_algebra"] = encode_subspace(sp.derived)
        return result, []

    run_on_algebra("spaces", source, build, output_format)
