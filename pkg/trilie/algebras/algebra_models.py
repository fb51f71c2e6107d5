from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator
from pydantic.functional_validators import BeforeValidator
from typing_extensions import Annotated

from ..exceptions import TrilieError
from ..linalg.linalg_models import Matrix, Vector, as_fraction, combine, unit_vector


class DimensionMismatch(TrilieError):
    """Vectors or maps do not match the algebra's dimension."""


class BlocksNotValid(TrilieError):
    """A proposed block decomposition is not a decomposition into ideals."""


Triple = tuple[int, int, int]


def permutation_sign(indices: Sequence[int]) -> int:
    """Sign of the permutation sorting distinct indices; 0 when an index repeats."""
    if len(set(indices)) != len(indices):
        return 0
    sign = 1
    items = list(indices)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                sign = -sign
    return sign


@dataclass(frozen=True)
class Algebra:
    """A 3-Lie algebra given by structure constants in a fixed basis e_0..e_{n-1}.

    Only triples i<j<k are stored; every other ordering follows by sign.
    Constants are kept as a sorted tuple so that equal algebras hash equal.
    """

    dim: int
    constants: tuple[tuple[Triple, Vector], ...] = ()
    labels: tuple[str, ...] = ()
    name: str = "algebra"

    @classmethod
    def from_brackets(cls, dim: int, brackets: Mapping[Triple, Sequence], labels: Sequence[str] | None = None,
                      name: str = "algebra") -> "Algebra":
        """Build from brackets given on any ordering of three distinct indices."""
        table: dict[Triple, list[Fraction]] = {}
        for triple, value in brackets.items():
            if len(value) != dim:
                raise DimensionMismatch(f"bracket value of length {len(value)} in dimension {dim}")
            if any(not 0 <= t < dim for t in triple):
                raise DimensionMismatch(f"basis index out of range in {triple}")
            sign = permutation_sign(triple)
            if sign == 0:
                if any(value):
                    raise DimensionMismatch(f"repeated index in {triple} must bracket to zero")
                continue
            key = tuple(sorted(triple))
            acc = table.setdefault(key, [Fraction(0)] * dim)
            for l, x in enumerate(value):
                acc[l] += sign * as_fraction(x)
        constants = tuple(sorted((k, tuple(v)) for k, v in table.items() if any(v)))
        if labels is None:
            labels = tuple(f"e{i + 1}" for i in range(dim))
        return cls(dim, constants, tuple(labels), name)

    @cached_property
    def table(self) -> dict[Triple, Vector]:
        return dict(self.constants)

    @property
    def is_abelian(self) -> bool:
        return not self.constants

    def basis_bracket(self, i: int, j: int, k: int) -> Vector:
        sign = permutation_sign((i, j, k))
        if sign == 0:
            return (Fraction(0),) * self.dim
        value = self.table.get(tuple(sorted((i, j, k))))
        if value is None:
            return (Fraction(0),) * self.dim
        return value if sign > 0 else tuple(-x for x in value)

    @cached_property
    def ad_matrices(self) -> dict[tuple[int, int], Matrix]:
        """Matrices of ad(e_i, e_j) for every ordered pair i != j."""
        out = {}
        for i in range(self.dim):
            for j in range(self.dim):
                if i != j:
                    columns = [self.basis_bracket(i, j, k) for k in range(self.dim)]
                    out[(i, j)] = Matrix.from_columns(columns, self.dim)
        return out

    def ad_basis(self, i: int, j: int) -> Matrix:
        if i == j:
            return Matrix.zeros(self.dim, self.dim)
        return self.ad_matrices[(i, j)]

    def check_vector(self, v: Sequence[Fraction]):
        if len(v) != self.dim:
            raise DimensionMismatch(f"vector of length {len(v)} in {self.name} of dimension {self.dim}")


@dataclass(frozen=True)
class LinearMap:
    """Endomorphism of F^n. Column j of the matrix is the image of e_j."""

    matrix: Matrix

    @property
    def dim(self) -> int:
        return self.matrix.nrows

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(Matrix.identity(n))

    @classmethod
    def zero(cls, n: int) -> "LinearMap":
        return cls(Matrix.zeros(n, n))

    @classmethod
    def elementary(cls, i: int, j: int, n: int) -> "LinearMap":
        """The map sending e_i to e_j and every other basis vector to zero."""
        columns = [unit_vector(n, j) if k == i else (Fraction(0),) * n for k in range(n)]
        return cls(Matrix.from_columns(columns, n))

    @classmethod
    def from_images(cls, images: Sequence[Sequence], n: int) -> "LinearMap":
        return cls(Matrix.from_columns(images, n))

    @classmethod
    def from_coords(cls, coords: Sequence[Fraction], n: int) -> "LinearMap":
        """Inverse of to_coords: coords[i*n + l] is the e_l coefficient of f(e_i)."""
        if len(coords) != n * n:
            raise DimensionMismatch(f"{len(coords)} coordinates for a map on F^{n}")
        return cls.from_images([coords[i * n:(i + 1) * n] for i in range(n)], n)

    def to_coords(self) -> Vector:
        return tuple(x for image in self.images() for x in image)

    def images(self) -> tuple[Vector, ...]:
        return self.matrix.columns()

    def apply(self, v: Sequence[Fraction]) -> Vector:
        return self.matrix.apply(v)

    def image_of_basis(self, i: int) -> Vector:
        return self.matrix.column(i)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        return LinearMap(self.matrix @ other.matrix)

    def power(self, k: int) -> "LinearMap":
        return LinearMap(self.matrix.power(k))

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def scale(self, c) -> "LinearMap":
        return LinearMap(self.matrix.scale(c))

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.matrix + other.matrix)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.matrix - other.matrix)

    def __neg__(self) -> "LinearMap":
        return LinearMap(-self.matrix)


def map_from_combination(coefficients: Sequence[Fraction], maps: Sequence[LinearMap], n: int) -> LinearMap:
    coords = combine(coefficients, [m.to_coords() for m in maps], n * n)
    return LinearMap.from_coords(coords, n)


def parse_rational(value):
    """Accept ints, Fractions and strings like "-3/2"; floats are rejected."""
    if isinstance(value, bool):
        raise ValueError('booleans are not rational numbers')
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            text = value.strip()
            if any(c in text for c in '.eE'):
                raise ValueError
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f'"{value}" is not a rational of the form p/q')
    raise ValueError(f'{value!r} is not an exact rational; write it as a string "p/q"')


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# Exact rational field, parsed from "p/q" strings or integers and written back as "p/q".
Rational = Annotated[Fraction, BeforeValidator(parse_rational)]


class BracketEntry(BaseModel):
    """One structure constant [e_i, e_j, e_k] with 1-based i < j < k."""

    i: int = Field(ge=1)
    j: int = Field(ge=1)
    k: int = Field(ge=1)
    value: list[Rational]

    @model_validator(mode='after')
    def check_order(self):
        if not self.i < self.j < self.k:
            raise ValueError(f'bracket indices must satisfy i < j < k, got ({self.i}, {self.j}, {self.k})')
        return self

    @field_serializer('value')
    def serialize_value(self, value: list[Fraction], _info):
        return [format_rational(x) for x in value]

    model_config = ConfigDict(arbitrary_types_allowed=True)


class AlgebraDocument(BaseModel):
    """
    File form of an algebra: dimension, optional labels, bracket table
    and optional torus and block decomposition.
    """
    dim: int = Field(ge=0)
    name: Optional[str] = None
    labels: Optional[list[str]] = None
    brackets: list[BracketEntry] = Field(default_factory=list)
    torus: Optional[list[list[Rational]]] = None
    blocks: Optional[list[list[int]]] = None

    @field_validator('labels')
    @classmethod
    def unique_labels(cls, labels):
        if labels is not None and len(set(labels)) != len(labels):
            raise ValueError('basis labels must be distinct')
        return labels

    @model_validator(mode='after')
    def check_shape(self):
        n = self.dim
        if self.labels is not None and len(self.labels) != n:
            raise ValueError(f'{len(self.labels)} labels for dimension {n}')
        seen = set()
        for entry in self.brackets:
            key = (entry.i, entry.j, entry.k)
            if entry.k > n:
                raise ValueError(f'bracket index {entry.k} exceeds dimension {n}')
            if key in seen:
                raise ValueError(f'duplicate bracket entry {key}')
            seen.add(key)
            if len(entry.value) != n:
                raise ValueError(f'bracket {key} has {len(entry.value)} coordinates, expected {n}')
        for vector in self.torus or []:
            if len(vector) != n:
                raise ValueError(f'torus vector has {len(vector)} coordinates, expected {n}')
        if self.blocks is not None:
            flat = [i for block in self.blocks for i in block]
            if sorted(flat) != list(range(1, n + 1)):
                raise ValueError('blocks must partition the basis indices 1..dim')
            if any(not block for block in self.blocks):
                raise ValueError('blocks must be non-empty')
        return self

    @field_serializer('torus')
    def serialize_torus(self, torus, _info):
        if torus is None:
            return None
        return [[format_rational(x) for x in v] for v in torus]

    def to_algebra(self, default_name: str = "algebra") -> Algebra:
        brackets = {(e.i - 1, e.j - 1, e.k - 1): e.value for e in self.brackets}
        return Algebra.from_brackets(self.dim, brackets, self.labels, self.name or default_name)

    @classmethod
    def from_algebra(cls, a: Algebra, torus=None, blocks=None) -> "AlgebraDocument":
        return cls(
            dim=a.dim,
            name=a.name,
            labels=list(a.labels),
            brackets=[BracketEntry(i=i + 1, j=j + 1, k=k + 1, value=list(v)) for (i, j, k), v in a.constants],
            torus=torus,
            blocks=blocks,
        )

    model_config = ConfigDict(
        populate_by_name=True,
        arbitrary_types_allowed=True,
        json_schema_extra={
            "example": {
                "name": "A3",
                "dim": 3,
                "labels": ["x1", "x2", "x3"],
                "brackets": [{"i": 1, "j": 2, "k": 3, "value": ["1", "0", "0"]}],
                "torus": [["0", "1", "0"], ["0", "0", "1"]],
            }
        },
    )
