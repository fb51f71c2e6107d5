import logging
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from sympy import Poly, Rational, Symbol
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .linalg_models import (
    AmbientMismatch, Matrix, NonRationalSpectrum, NotCommuting, NotDiagonalizable,
    SpaceNotInvariant, Subspace, Vector, combine, unit_vector, zero_vector,
)

log = logging.getLogger(__name__)

# A sparse row of a linear system: column index -> nonzero coefficient.
SparseRow = Mapping[int, Fraction]

_LAMBDA = Symbol('lam')


def _to_qq(x: Fraction):
    return QQ(x.numerator, x.denominator)


def _from_qq(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _domain_from_sparse(rows: Sequence[SparseRow], ncols: int) -> DomainMatrix:
    data = {}
    for i, row in enumerate(rows):
        entries = {j: _to_qq(Fraction(v)) for j, v in row.items() if v}
        if entries:
            data[i] = entries
    return DomainMatrix(data, (len(rows), ncols), QQ)


def _domain_from_matrix(m: Matrix) -> DomainMatrix:
    return _domain_from_sparse(
        [{j: x for j, x in enumerate(row) if x} for row in m.rows], m.ncols)


def _sparse_entries(dm: DomainMatrix) -> dict[int, dict[int, Fraction]]:
    return {i: {j: _from_qq(x) for j, x in row.items()}
            for i, row in dm.to_sparse().rep.items()}


def _matrix_from_domain(dm: DomainMatrix) -> Matrix:
    nrows, ncols = dm.shape
    entries = _sparse_entries(dm)
    rows = []
    for i in range(nrows):
        row = [Fraction(0)] * ncols
        for j, x in entries.get(i, {}).items():
            row[j] = x
        rows.append(tuple(row))
    return Matrix(nrows, ncols, tuple(rows))


def _rref_sparse(rows: Sequence[SparseRow], ncols: int) -> tuple[list[Vector], tuple[int, ...]]:
    """Nonzero rows of the reduced echelon form and their pivot columns."""
    if ncols == 0 or not any(any(r.values()) for r in rows):
        return [], ()
    reduced, pivots = _domain_from_sparse(rows, ncols).rref()
    entries = _sparse_entries(reduced)
    out = []
    for r in range(len(pivots)):
        row = [Fraction(0)] * ncols
        for j, x in entries.get(r, {}).items():
            row[j] = x
        out.append(tuple(row))
    return out, tuple(pivots)


def _subspace_from_sparse(rows: Sequence[SparseRow], ncols: int) -> Subspace:
    reduced, pivots = _rref_sparse(rows, ncols)
    return Subspace(ncols, Matrix(len(reduced), ncols, tuple(reduced)), pivots)


def _sparse(v: Sequence[Fraction]) -> dict[int, Fraction]:
    return {j: x for j, x in enumerate(v) if x}


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row-echelon form of m (same shape, zero rows last) and its pivots."""
    reduced, pivots = _rref_sparse([_sparse(r) for r in m.rows], m.ncols)
    padding = (zero_vector(m.ncols),) * (m.nrows - len(reduced))
    return Matrix(m.nrows, m.ncols, tuple(reduced) + padding), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def span(vectors: Iterable[Sequence[Fraction]], ambient_dim: int) -> Subspace:
    rows = []
    for v in vectors:
        if len(v) != ambient_dim:
            raise AmbientMismatch(f"vector of length {len(v)} in F^{ambient_dim}")
        rows.append(_sparse(v))
    return _subspace_from_sparse(rows, ambient_dim)


def nullspace_of_rows(rows: Sequence[SparseRow], ncols: int) -> Subspace:
    """Solutions x of the homogeneous system given by sparse rows, canonicalized."""
    reduced, pivots = _rref_sparse(rows, ncols)
    pivot_set = set(pivots)
    generators = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = {free: Fraction(1)}
        for row, p in zip(reduced, pivots):
            if row[free]:
                v[p] = -row[free]
        generators.append(v)
    log.debug("nullspace: %d unknowns, rank %d", ncols, len(pivots))
    return _subspace_from_sparse(generators, ncols)


def nullspace(m: Matrix) -> Subspace:
    return nullspace_of_rows([_sparse(r) for r in m.rows], m.ncols)


def _check_ambient(u: Subspace, v: Subspace):
    if u.ambient_dim != v.ambient_dim:
        raise AmbientMismatch(
            f"subspaces of F^{u.ambient_dim} and F^{v.ambient_dim} cannot be combined")


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    _check_ambient(u, v)
    return span(u.vectors + v.vectors, u.ambient_dim)


def annihilator(u: Subspace) -> Subspace:
    """Linear forms vanishing on u, written in the dual coordinate basis."""
    return nullspace_of_rows([_sparse(r) for r in u.vectors], u.ambient_dim)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    _check_ambient(u, v)
    forms = annihilator(u).vectors + annihilator(v).vectors
    return nullspace_of_rows([_sparse(r) for r in forms], u.ambient_dim)


def subspace_contains(u: Subspace, v: Subspace) -> bool:
    """Whether v is a subspace of u."""
    _check_ambient(u, v)
    return all(u.contains_vector(b) for b in v.vectors)


def subspace_complement(u: Subspace) -> Subspace:
    pivots = set(u.pivots)
    n = u.ambient_dim
    return span([unit_vector(n, j) for j in range(n) if j not in pivots], n)


def independent(spaces: Sequence[Subspace], ambient_dim: int) -> bool:
    """Whether the sum of the spaces is direct."""
    total = span([v for s in spaces for v in s.vectors], ambient_dim)
    return total.dim == sum(s.dim for s in spaces)


def solve_rows(rows: Sequence[SparseRow], rhs: Sequence[Fraction], ncols: int) -> Vector | None:
    """A particular solution of rows * x = rhs with every free variable set to zero.

    Returns None when the system is inconsistent.
    """
    if len(rows) != len(rhs):
        raise AmbientMismatch(f"{len(rows)} equations but {len(rhs)} right-hand sides")
    augmented = []
    for row, b in zip(rows, rhs):
        r = dict(row)
        if b:
            r[ncols] = Fraction(b)
        augmented.append(r)
    reduced, pivots = _rref_sparse(augmented, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(reduced, pivots):
        x[p] = row[ncols]
    return tuple(x)


def solve_affine(m: Matrix, rhs: Sequence[Fraction]) -> Vector | None:
    if len(rhs) != m.nrows:
        raise AmbientMismatch(f"right-hand side of length {len(rhs)} for {m.nrows} equations")
    return solve_rows([_sparse(r) for r in m.rows], rhs, m.ncols)


def inverse(m: Matrix) -> Matrix:
    if not m.is_square:
        raise AmbientMismatch(f"cannot invert a {m.nrows}x{m.ncols} matrix")
    if m.nrows == 0:
        return m
    return _matrix_from_domain(_domain_from_matrix(m).to_dense().inv())


def multiply_sparse(left: Matrix, right: Matrix) -> Matrix:
    """Product computed through sparse domain matrices; suited to large sparse factors."""
    if left.ncols != right.nrows:
        raise AmbientMismatch(f"cannot multiply {left.shape} by {right.shape}")
    if left.nrows == 0 or right.ncols == 0 or left.ncols == 0:
        return Matrix.zeros(left.nrows, right.ncols)
    return _matrix_from_domain(_domain_from_matrix(left) * _domain_from_matrix(right))


def restrict(op: Matrix, space: Subspace) -> Matrix:
    """Matrix of op on an invariant subspace, in the subspace's basis.

    Column j holds the coordinates of op applied to the j-th basis vector.
    """
    if op.nrows != space.ambient_dim or not op.is_square:
        raise AmbientMismatch(f"operator {op.shape} on a subspace of F^{space.ambient_dim}")
    columns = []
    for b in space.vectors:
        coords = space.coordinates(op.apply(b))
        if coords is None:
            raise SpaceNotInvariant("operator does not preserve the subspace")
        columns.append(coords)
    return Matrix.from_columns(columns, space.dim)


def rational_eigenvalues(op: Matrix) -> dict[Fraction, int]:
    """Eigenvalues of op with algebraic multiplicity.

    Raises NonRationalSpectrum unless every root of the characteristic
    polynomial is rational.
    """
    if not op.is_square:
        raise AmbientMismatch(f"eigenvalues of a {op.nrows}x{op.ncols} matrix")
    n = op.nrows
    if n == 0:
        return {}
    coefficients = _domain_from_matrix(op).to_dense().charpoly()
    poly = Poly([Rational(int(c.numerator), int(c.denominator)) for c in coefficients], _LAMBDA)
    roots = poly.ground_roots()
    found = {Fraction(int(r.p), int(r.q)): m for r, m in roots.items()}
    if sum(found.values()) != n:
        raise NonRationalSpectrum(
            f"characteristic polynomial {poly.as_expr()} has irrational or complex roots")
    return dict(sorted(found.items()))


def commute(a: Matrix, b: Matrix) -> bool:
    return a @ b == b @ a


def simultaneous_eigenspaces(ops: Sequence[Matrix], dim: int) -> list[tuple[Vector, Subspace]]:
    """Joint eigenspace decomposition of a commuting family of diagonalizable operators on F^dim.

    Entries are sorted by eigenvalue tuple; the tuple lists one eigenvalue
    per operator, in the order given. An empty family gives the single
    entry ((), F^dim).
    """
    for op in ops:
        if op.shape != (dim, dim):
            raise AmbientMismatch(f"operator of shape {op.shape} in a family on F^{dim}")
    for i, a in enumerate(ops):
        for b in ops[i + 1:]:
            if not commute(a, b):
                raise NotCommuting("operators in the family do not commute")

    pieces: list[tuple[Vector, Subspace]] = [((), Subspace.full(dim))]
    for op in ops:
        refined = []
        for values, space in pieces:
            if space.dim == 0:
                continue
            local = restrict(op, space)
            found = 0
            for lam, _ in rational_eigenvalues(local).items():
                kernel = nullspace(local - Matrix.identity(space.dim).scale(lam))
                vectors = [combine(c, space.vectors, dim) for c in kernel.vectors]
                refined.append((values + (lam,), span(vectors, dim)))
                found += kernel.dim
            if found != space.dim:
                raise NotDiagonalizable(
                    f"eigenspaces of dimension {found} in an invariant space of dimension {space.dim}")
        pieces = refined
    return sorted(pieces, key=lambda item: item[0])
