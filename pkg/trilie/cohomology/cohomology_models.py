from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..linalg.linalg_models import Matrix, Vector

Triple = tuple[int, int, int]
FiveTuple = tuple[int, int, int, int, int]


def triple_index(i: int, j: int, k: int, n: int) -> int:
    """Coordinate of e_i⊗e_j⊗e_k in F^(n^3)."""
    return (i * n + j) * n + k


@dataclass(frozen=True)
class TensorMap:
    """A linear map out of A⊗A⊗A; columns are indexed by triple_index."""

    n: int
    matrix: Matrix

    def apply(self, v: Sequence[Fraction]) -> Vector:
        return self.matrix.apply(v)


@dataclass
class Cochain1:
    """A trilinear map A×A×A -> A given on ordered basis triples; missing triples are zero."""

    dim: int
    values: dict[Triple, Vector] = field(default_factory=dict)

    def at(self, i: int, j: int, k: int) -> Vector:
        return self.values.get((i, j, k), (Fraction(0),) * self.dim)

    def with_slot(self, triple: Triple, slot: int, v: Sequence[Fraction]) -> Vector:
        """Value with the basis vector in one slot replaced by v."""
        acc = [Fraction(0)] * self.dim
        args = list(triple)
        for l, c in enumerate(v):
            if not c:
                continue
            args[slot] = l
            value = self.values.get(tuple(args))
            if value is None:
                continue
            for r, x in enumerate(value):
                if x:
                    acc[r] += c * x
        return tuple(acc)

    def is_zero(self) -> bool:
        return not any(any(v) for v in self.values.values())

    def __sub__(self, other: "Cochain1") -> "Cochain1":
        keys = set(self.values) | set(other.values)
        return Cochain1(self.dim, {k: tuple(a - b for a, b in zip(self.at(*k), other.at(*k))) for k in keys})
