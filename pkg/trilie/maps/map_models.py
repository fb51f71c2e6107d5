from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from ..algebras.algebra_models import LinearMap
from ..exceptions import TrilieError
from ..linalg.linalg_models import Subspace


class NotAGeneralizedDerivation(TrilieError):
    """No companions (f2, f3, f') exist for the given map."""


class NotInDelta(TrilieError):
    """The quadruple does not satisfy the generalized derivation identity."""


class MapKind(str, Enum):
    DER = "der"
    AD = "ad"
    ZDER = "zder"
    CENTROID = "centroid"
    QCENTROID = "qcentroid"
    QDER_PAIRS = "qder_pairs"
    DELTA = "delta"
    QDER = "qder"
    GDER = "gder"


class Ambient(str, Enum):
    HOM = "hom"
    PAIRS = "pairs"
    QUADRUPLES = "quadruples"


AMBIENT_FACTOR = {Ambient.HOM: 1, Ambient.PAIRS: 2, Ambient.QUADRUPLES: 4}


@dataclass(frozen=True)
class QDerPair:
    f: LinearMap
    fprime: LinearMap

    def to_coords(self):
        return self.f.to_coords() + self.fprime.to_coords()


@dataclass(frozen=True)
class GenDerQuadruple:
    f1: LinearMap
    f2: LinearMap
    f3: LinearMap
    fprime: LinearMap

    def to_coords(self):
        return self.f1.to_coords() + self.f2.to_coords() + self.f3.to_coords() + self.fprime.to_coords()

    @property
    def maps(self) -> tuple[LinearMap, LinearMap, LinearMap]:
        return self.f1, self.f2, self.f3


def _split(coords: Sequence[Fraction], n: int, parts: int) -> list[LinearMap]:
    size = n * n
    return [LinearMap.from_coords(coords[p * size:(p + 1) * size], n) for p in range(parts)]


@dataclass(frozen=True)
class MapSpace:
    """A space of maps (or tuples of maps) on an n-dimensional algebra.

    Coordinates of a single map follow LinearMap.to_coords; tuples
    concatenate the coordinates of their components.
    """

    kind: MapKind
    ambient: Ambient
    n: int
    space: Subspace

    def __post_init__(self):
        expected = AMBIENT_FACTOR[self.ambient] * self.n * self.n
        if self.space.ambient_dim != expected:
            raise ValueError(f"{self.kind.value}: subspace of F^{self.space.ambient_dim}, expected F^{expected}")

    @property
    def dim(self) -> int:
        return self.space.dim

    def maps(self) -> list[LinearMap]:
        if self.ambient is not Ambient.HOM:
            raise ValueError(f"{self.kind.value} holds tuples of maps, not maps")
        return [LinearMap.from_coords(v, self.n) for v in self.space.vectors]

    def pairs(self) -> list[QDerPair]:
        if self.ambient is not Ambient.PAIRS:
            raise ValueError(f"{self.kind.value} does not hold pairs")
        return [QDerPair(*_split(v, self.n, 2)) for v in self.space.vectors]

    def quadruples(self) -> list[GenDerQuadruple]:
        if self.ambient is not Ambient.QUADRUPLES:
            raise ValueError(f"{self.kind.value} does not hold quadruples")
        return [GenDerQuadruple(*_split(v, self.n, 4)) for v in self.space.vectors]

    def contains(self, f: LinearMap) -> bool:
        return self.space.contains_vector(f.to_coords())

    def contains_pair(self, p: QDerPair) -> bool:
        return self.space.contains_vector(p.to_coords())

    def contains_quadruple(self, q: GenDerQuadruple) -> bool:
        return self.space.contains_vector(q.to_coords())
