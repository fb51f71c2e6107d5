import logging
import re
from pathlib import Path

from ..algebras.algebra_catalog import load_catalog
from ..algebras.algebra_files import AlgebraInput, read_document, validated_input
from ..algebras.algebra_models import Algebra, LinearMap, parse_rational
from ..exceptions import AlgebraFormatError
from ..linalg.linalg_models import Vector, unit_vector

log = logging.getLogger(__name__)

CATALOG_PREFIX = "catalog:"
_BASIS_NAME = re.compile(r"e(\d+)")


def load_algebra(source: str) -> AlgebraInput:
    """Resolve a command-line algebra argument: a file path or catalog:NAME."""
    if source.startswith(CATALOG_PREFIX):
        return load_catalog(source[len(CATALOG_PREFIX):])
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise AlgebraFormatError(f"{source}: cannot read file ({e.strerror or e.__class__.__name__})")
    return validated_input(read_document(text, source), source)


def _vector(text: str, a: Algebra) -> Vector:
    token = text.strip()
    if token in a.labels:
        return unit_vector(a.dim, a.labels.index(token))
    match = _BASIS_NAME.fullmatch(token)
    if match and "," not in token:
        k = int(match.group(1))
        if not 1 <= k <= a.dim:
            raise AlgebraFormatError(f"basis vector {token} outside dimension {a.dim}")
        return unit_vector(a.dim, k - 1)
    try:
        values = tuple(parse_rational(x) for x in token.split(","))
    except ValueError as e:
        raise AlgebraFormatError(str(e))
    if len(values) != a.dim:
        raise AlgebraFormatError(f"vector '{token}' has {len(values)} coordinates, expected {a.dim}")
    return values


def parse_torus(text: str, a: Algebra) -> tuple[Vector, ...]:
    """Generators separated by ';', each a basis label, e<k>, or comma-separated rationals."""
    generators = tuple(_vector(part, a) for part in text.split(";") if part.strip())
    if not generators:
        raise AlgebraFormatError("empty torus")
    return generators


def parse_map(text: str, a: Algebra) -> LinearMap:
    """A map written as rows of images separated by ';': row i is f(e_i)."""
    rows = [part for part in text.split(";") if part.strip()]
    if len(rows) != a.dim:
        raise AlgebraFormatError(f"map has {len(rows)} rows, expected {a.dim}")
    return LinearMap.from_images([_vector(row, a) for row in rows], a.dim)
