from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from ..algebras.algebra_models import format_rational
from ..exceptions import InvalidTorusError
from ..linalg.linalg_models import Subspace, Vector


class NotAbelian(InvalidTorusError):
    """[T, T, T] is not zero."""


class TorusNotCommuting(InvalidTorusError):
    """Some ad(t_i, t_j) do not commute."""


class NonDiagonalizable(InvalidTorusError):
    """The operators ad(t_i, t_j) are not simultaneously diagonalizable over the rationals."""


class ZeroWeightSpaceExceedsTorus(InvalidTorusError):
    """The joint kernel of the ad(t_i, t_j) is larger than T."""


class DependentGenerators(InvalidTorusError):
    """The torus generators are linearly dependent."""


@dataclass(frozen=True)
class Torus:
    generators: tuple[Vector, ...]

    @property
    def rank(self) -> int:
        return len(self.generators)

    def pairs(self) -> list[tuple[int, int]]:
        return list(combinations(range(self.rank), 2))


@dataclass(frozen=True, order=True)
class WeightFunctional:
    """A functional on T∧T given by its values on generator pairs (i, j), i < j, in order."""

    values: tuple[Fraction, ...]

    @classmethod
    def zero(cls, rank: int) -> "WeightFunctional":
        return cls((Fraction(0),) * (rank * (rank - 1) // 2))

    def is_zero(self) -> bool:
        return not any(self.values)

    def __add__(self, other: "WeightFunctional") -> "WeightFunctional":
        return WeightFunctional(tuple(a + b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "WeightFunctional":
        return WeightFunctional(tuple(-a for a in self.values))

    def evaluate(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        """Value on two elements of T given by coordinates in the generator basis."""
        rank = len(u)
        total = Fraction(0)
        for value, (i, j) in zip(self.values, combinations(range(rank), 2)):
            total += value * (u[i] * v[j] - u[j] * v[i])
        return total

    def label(self) -> str:
        return "(" + ", ".join(format_rational(x) for x in self.values) + ")"


@dataclass
class WeightDecomposition:
    """Weight spaces of a decomposition of F^ambient_dim, zero weight always present."""

    ambient: str
    ambient_dim: int
    rank: int
    entries: dict[WeightFunctional, Subspace] = field(default_factory=dict)

    def __post_init__(self):
        zero = WeightFunctional.zero(self.rank)
        if zero not in self.entries:
            self.entries[zero] = Subspace.zero(self.ambient_dim)
        self.entries = dict(sorted(self.entries.items()))

    def get(self, weight: WeightFunctional) -> Subspace:
        return self.entries.get(weight, Subspace.zero(self.ambient_dim))

    @property
    def zero_weight(self) -> WeightFunctional:
        return WeightFunctional.zero(self.rank)

    @property
    def zero_part(self) -> Subspace:
        return self.get(self.zero_weight)

    def nonzero_weights(self) -> list[WeightFunctional]:
        return [w for w, s in self.entries.items() if not w.is_zero() and s.dim]

    def dimensions(self) -> dict[str, int]:
        return {w.label(): s.dim for w, s in self.entries.items()}
