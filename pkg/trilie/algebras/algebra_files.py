import logging
from dataclasses import dataclass
from typing import Optional

import yaml
from pydantic import ValidationError

from ..exceptions import AlgebraFormatError, InvalidAlgebraError
from ..linalg.linalg_models import Vector
from .algebra_models import Algebra, AlgebraDocument
from .algebra_ops import fundamental_identity_violations

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlgebraInput:
    """A validated algebra together with the optional torus and blocks of its file."""

    algebra: Algebra
    source: str
    torus: Optional[tuple[Vector, ...]] = None
    blocks: Optional[tuple[tuple[int, ...], ...]] = None


def _describe(error: ValidationError) -> str:
    first = error.errors()[0]
    where = '.'.join(str(p) for p in first['loc']) or 'document'
    return f"{where}: {first['msg']}"


def read_document(text: str, origin: str) -> AlgebraDocument:
    """Parse YAML (or JSON) text into an AlgebraDocument; format problems raise AlgebraFormatError."""
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise AlgebraFormatError(f"{origin}: not a YAML or JSON document ({e.__class__.__name__})")
    if not isinstance(raw, dict):
        raise AlgebraFormatError(f"{origin}: expected a mapping with 'dim' and 'brackets'")
    try:
        return AlgebraDocument.model_validate(raw)
    except ValidationError as e:
        raise AlgebraFormatError(f"{origin}: {_describe(e)}")


def validated_input(document: AlgebraDocument, origin: str) -> AlgebraInput:
    """Build the algebra and reject it unless the fundamental identity holds."""
    algebra = document.to_algebra(default_name=origin)
    violations = fundamental_identity_violations(algebra)
    if violations:
        (x1, x2, x3, y2, y3), _ = violations[0]
        raise InvalidAlgebraError(
            f"{algebra.name}: fundamental identity fails on {len(violations)} basis 5-tuples, "
            f"first at (x1, x2, x3, y2, y3) = {(x1 + 1, x2 + 1, x3 + 1, y2 + 1, y3 + 1)}")
    log.info("loaded %s (dimension %d)", algebra.name, algebra.dim)
    torus = tuple(tuple(v) for v in document.torus) if document.torus is not None else None
    blocks = tuple(tuple(i - 1 for i in b) for b in document.blocks) if document.blocks is not None else None
    return AlgebraInput(algebra, origin, torus, blocks)
