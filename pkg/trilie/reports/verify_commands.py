from typing import Annotated

import typer

from ..algebras.algebra_commands import block_checks
from ..algebras.algebra_files import AlgebraInput
from ..app import app, settings
from ..cohomology.cohomology_commands import kernel_section
from ..dependencies.runner import (
    FormatOption, MaxExhaustiveOption, OutputFormat, RandomMapsOption, SeedOption, TorusOption, run_on_algebra,
)
from ..extension.extension_commands import extension_section
from ..maps.map_commands import space_checks, space_dimensions
from ..maps.map_spaces import AlgebraSpaces
from ..weights.weight_commands import decomposable_section, resolve_torus, weight_section


@app.command("verify")
def verify(source: Annotated[str, typer.Argument(help="Algebra file or catalog:NAME.")],
           torus_text: TorusOption = None,
           seed: SeedOption = settings.seed,
           max_exhaustive: MaxExhaustiveOption = settings.max_exhaustive,
           random_maps: RandomMapsOption = settings.random_maps,
           max_extension_dim: Annotated[int, typer.Option(
               "--max-extension-dim", help="Largest extension dimension for the Der(Ã) splitting.")]
           = settings.max_extension_dim,
           output_format: FormatOption = OutputFormat(settings.format)):
    """Run every check that applies to the algebra; exits 0 only when all of them pass."""

    def build(loaded: AlgebraInput):
        sp = AlgebraSpaces(loaded.algebra)
        result = {"dimensions": space_dimensions(sp)}
        checks = block_checks(loaded)
        valid_blocks = loaded.blocks if all(c.passed for c in checks) else None
        checks += space_checks(sp, valid_blocks)

        section, more = extension_section(sp, max_extension_dim)
        result["extension"] = section
        checks += more

        section, more = kernel_section(sp, seed, max_exhaustive, settings.sample_size, random_maps)
        result["kernel"] = section
        checks += more

        torus = resolve_torus(loaded, torus_text)
        if torus is not None:
            section, more = weight_section(sp, torus)
            result["weights"] = section
            checks += more

        section, more = decomposable_section(sp, loaded)
        if section:
            result["decomposable"] = section
            checks += more
        return result, checks

    run_on_algebra("verify", source, build, output_format)
