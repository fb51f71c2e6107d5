from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ..exceptions import TrilieError

# Coordinates of a vector in a fixed basis. Always exact.
Vector = tuple[Fraction, ...]


class AmbientMismatch(TrilieError):
    """Two objects live in spaces of different dimension."""


class NotCommuting(TrilieError):
    """A family of operators expected to commute does not."""


class NonRationalSpectrum(TrilieError):
    """The characteristic polynomial has roots outside the rationals."""


class NotDiagonalizable(TrilieError):
    """Eigenspaces do not exhaust the space."""


class SpaceNotInvariant(TrilieError):
    """An operator does not map a subspace into itself."""


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1) if k == i else Fraction(0) for k in range(n))


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return not any(v)


def add_vectors(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub_vectors(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale_vector(c: Fraction, v: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in v)


def combine(coefficients: Iterable[Fraction], vectors: Sequence[Sequence[Fraction]], n: int) -> Vector:
    """Linear combination sum c_r * v_r of vectors of length n."""
    acc = [Fraction(0)] * n
    for c, v in zip(coefficients, vectors):
        if not c:
            continue
        for i, x in enumerate(v):
            if x:
                acc[i] += c * x
    return tuple(acc)


@dataclass(frozen=True)
class Matrix:
    """Dense exact matrix stored row by row."""

    nrows: int
    ncols: int
    rows: tuple[Vector, ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows or any(len(r) != self.ncols for r in self.rows):
            raise AmbientMismatch(
                f"matrix entries do not match shape {self.nrows}x{self.ncols}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ncols: int | None = None) -> "Matrix":
        data = tuple(tuple(as_fraction(x) for x in row) for row in rows)
        if ncols is None:
            if not data:
                raise AmbientMismatch("column count is required for a matrix without rows")
            ncols = len(data[0])
        return cls(len(data), ncols, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int) -> "Matrix":
        cols = [tuple(as_fraction(x) for x in c) for c in columns]
        return cls(nrows, len(cols), tuple(tuple(c[i] for c in cols) for i in range(nrows)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(nrows, ncols, (zero_vector(ncols),) * nrows)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(unit_vector(n, i) for i in range(n)))

    @classmethod
    def diagonal(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls(n, n, tuple(
            tuple(as_fraction(entries[i]) if i == j else Fraction(0) for j in range(n))
            for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> tuple[Vector, ...]:
        return tuple(self.column(j) for j in range(self.ncols))

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(self.ncols, self.nrows, self.columns())

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.ncols:
            raise AmbientMismatch(f"vector of length {len(v)} applied to {self.nrows}x{self.ncols} matrix")
        return tuple(sum((a * b for a, b in zip(row, v) if a and b), Fraction(0)) for row in self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise AmbientMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        return Matrix(self.nrows, other.ncols, tuple(
            tuple(sum((a * b for a, b in zip(row, col) if a and b), Fraction(0)) for col in cols)
            for row in self.rows))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.nrows, self.ncols, tuple(
            add_vectors(r, s) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.nrows, self.ncols, tuple(
            sub_vectors(r, s) for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> "Matrix":
        return self.scale(Fraction(-1))

    def scale(self, c) -> "Matrix":
        c = as_fraction(c)
        return Matrix(self.nrows, self.ncols, tuple(scale_vector(c, r) for r in self.rows))

    def power(self, k: int) -> "Matrix":
        result = Matrix.identity(self.nrows)
        for _ in range(k):
            result = result @ self
        return result

    def stack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise AmbientMismatch(f"cannot stack {self.shape} on {other.shape}")
        return Matrix(self.nrows + other.nrows, self.ncols, self.rows + other.rows)

    def _check_same_shape(self, other: "Matrix"):
        if self.shape != other.shape:
            raise AmbientMismatch(f"shape {self.shape} does not match {other.shape}")


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^ambient_dim held by its reduced row-echelon basis.

    The basis is canonical, so two values compare equal exactly when the
    subspaces are equal as sets.
    """

    ambient_dim: int
    basis: Matrix
    pivots: tuple[int, ...]

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, Matrix.zeros(0, n), ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, Matrix.identity(n), tuple(range(n)))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @property
    def vectors(self) -> tuple[Vector, ...]:
        return self.basis.rows

    def coordinates(self, v: Sequence[Fraction]) -> Vector | None:
        """Coefficients of v in the basis, or None when v is not in the space.

        In reduced echelon form the coefficient of row r is the entry of v
        at that row's pivot column.
        """
        if len(v) != self.ambient_dim:
            raise AmbientMismatch(
                f"vector of length {len(v)} tested against a subspace of F^{self.ambient_dim}")
        coords = tuple(as_fraction(v[p]) for p in self.pivots)
        if tuple(v) != combine(coords, self.vectors, self.ambient_dim):
            return None
        return coords

    def contains_vector(self, v: Sequence[Fraction]) -> bool:
        return self.coordinates(v) is not None
