from typing import Any

import orjson
from rich.console import Console
from rich.table import Table

from ..algebras.algebra_models import LinearMap, format_rational
from ..linalg.linalg_models import Subspace
from ..maps.map_models import Ambient, MapSpace
from .report_models import Report


def encode_vector(v) -> list[str]:
    return [format_rational(x) for x in v]


def encode_map(f: LinearMap) -> list[list[str]]:
    """Rows of images: row i is f(e_i)."""
    return [encode_vector(f.image_of_basis(i)) for i in range(f.dim)]


def encode_subspace(space: Subspace) -> dict:
    return {"dim": space.dim, "basis": [encode_vector(v) for v in space.vectors]}


def encode_map_space(space: MapSpace) -> dict:
    if space.ambient is Ambient.HOM:
        basis = [encode_map(f) for f in space.maps()]
    elif space.ambient is Ambient.PAIRS:
        basis = [{"f": encode_map(p.f), "f_prime": encode_map(p.fprime)} for p in space.pairs()]
    else:
        basis = [{"f": [encode_map(g) for g in q.maps], "f_prime": encode_map(q.fprime)}
                 for q in space.quadruples()]
    return {"dim": space.dim, "basis": basis}


def render_structured(report: Report) -> bytes:
    return orjson.dumps(report.model_dump(mode="json"), option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2)


def _summary(value: Any) -> str:
    if isinstance(value, dict) and "dim" in value:
        return f"dim {value['dim']}"
    if isinstance(value, dict):
        return ", ".join(f"{k}: {_summary(v)}" for k, v in sorted(value.items()))
    if isinstance(value, list) and len(value) > 6:
        return f"{len(value)} entries"
    return str(value)


def render_text(report: Report, console: Console) -> None:
    console.print(f"[bold]{report.operation}[/bold] on [bold]{report.algebra_id}[/bold]")
    for key in sorted(report.result):
        console.print(f"  {key}: {_summary(report.result[key])}")
    if report.checks:
        table = Table(show_header=True, header_style="bold")
        table.add_column("check")
        table.add_column("result")
        table.add_column("detail")
        for check in report.checks:
            status = "[green]pass[/green]" if check.passed else "[red]FAIL[/red]"
            if check.sampled:
                status += " (sampled)"
            detail = check.detail if check.passed else f"{check.detail}; witness {check.witness}"
            table.add_row(check.name, status, detail)
        console.print(table)
    verdict = "[green]all checks passed[/green]" if report.passed else f"[red]{len(report.failures())} failed[/red]"
    console.print(verdict)
