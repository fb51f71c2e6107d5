import random
from typing import Annotated, Optional

import typer

from ..algebras.algebra_files import AlgebraInput
from ..app import app, settings
from ..dependencies.loaders import parse_map
from ..dependencies.runner import (
    FormatOption, MaxExhaustiveOption, OutputFormat, RandomMapsOption, SeedOption, run_on_algebra,
)
from ..maps.map_spaces import AlgebraSpaces
from ..reports.report_models import CheckResult
from .cohomology_checks import coboundary_checks, complex_checks, five_tuples, kernel_audit, random_map
from .cohomology_ops import KernelCriterion

# maps pushed through δ1∘δ0 besides any given one
COMPLEX_PROBES = 3


def kernel_section(sp: AlgebraSpaces, seed: int, max_exhaustive: int, sample_size: int, random_maps: int,
                   extra=()) -> tuple[dict, list[CheckResult]]:
    a = sp.algebra
    checks, result = kernel_audit(sp, random_maps, seed, extra)
    tuples, sampled = five_tuples(a.dim, max_exhaustive, sample_size, seed)
    checks += coboundary_checks(sp, tuples, sampled)
    rng = random.Random(seed)
    probes = list(extra) + [random_map(rng, a.dim) for _ in range(COMPLEX_PROBES)]
    checks += complex_checks(a, probes, tuples, sampled)
    result["five_tuples"] = len(tuples)
    result["five_tuples_sampled"] = sampled
    return result, checks


@app.command("kernel")
def kernel(source: Annotated[str, typer.Argument(help="Algebra file or catalog:NAME.")],
           map_text: Annotated[Optional[str], typer.Option(
               "--map", help="A map as rows of images separated by ';', row i being f(e_i).")] = None,
           seed: SeedOption = settings.seed,
           max_exhaustive: MaxExhaustiveOption = settings.max_exhaustive,
           random_maps: RandomMapsOption = settings.random_maps,
           output_format: FormatOption = OutputFormat(settings.format)):
    """Compare the Ker(μ) criterion with QDer and check the coboundary identities."""

    def build(loaded: AlgebraInput):
        a = loaded.algebra
        sp = AlgebraSpaces(a)
        extra = [parse_map(map_text, a)] if map_text else []
        result, checks = kernel_section(sp, seed, max_exhaustive, settings.sample_size, random_maps, extra)
        if extra:
            result["map"] = {"in_qder": sp.qder.contains(extra[0]),
                             "kernel_criterion": KernelCriterion(a).accepts(extra[0])}
        return result, checks

    run_on_algebra("kernel", source, build, output_format)
