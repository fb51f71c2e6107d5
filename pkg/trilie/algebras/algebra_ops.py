import logging
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from ..linalg.linalg_models import Matrix, Subspace, Vector, add_vectors, sub_vectors, unit_vector
from ..linalg.linalg_ops import independent, inverse, nullspace, span
from .algebra_models import Algebra, BlocksNotValid, DimensionMismatch, LinearMap

log = logging.getLogger(__name__)

FiveTuple = tuple[int, int, int, int, int]


def abelian(n: int) -> Algebra:
    return Algebra.from_brackets(n, {}, name=f"abelian({n})")


def bracket(a: Algebra, x: Sequence[Fraction], y: Sequence[Fraction], z: Sequence[Fraction]) -> Vector:
    """Trilinear skew-symmetric bracket expanded over the stored constants.

    For each stored triple i<j<k the coefficient is the 3x3 minor of
    (x, y, z) on the columns i, j, k.
    """
    for v in (x, y, z):
        a.check_vector(v)
    acc = [Fraction(0)] * a.dim
    for (i, j, k), value in a.constants:
        minor = (x[i] * (y[j] * z[k] - y[k] * z[j])
                 - x[j] * (y[i] * z[k] - y[k] * z[i])
                 + x[k] * (y[i] * z[j] - y[j] * z[i]))
        if not minor:
            continue
        for l, c in enumerate(value):
            if c:
                acc[l] += minor * c
    return tuple(acc)


def ad_map(a: Algebra, x: Sequence[Fraction], y: Sequence[Fraction]) -> LinearMap:
    """Left multiplication z -> [x, y, z]."""
    a.check_vector(x)
    a.check_vector(y)
    m = Matrix.zeros(a.dim, a.dim)
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if yj and i != j:
                m = m + a.ad_basis(i, j).scale(xi * yj)
    return LinearMap(m)


def fundamental_identity_violations(a: Algebra) -> list[tuple[FiveTuple, Vector]]:
    """Basis 5-tuples (x1, x2, x3, y2, y3), x1<x2<x3, where the fundamental identity fails.

    Entries carry 0-based indices and the residual lhs - rhs.
    """
    n = a.dim
    violations = []
    if a.is_abelian:
        return violations
    for x1, x2, x3 in combinations(range(n), 3):
        inner = a.basis_bracket(x1, x2, x3)
        for y2 in range(n):
            for y3 in range(n):
                if y2 == y3:
                    continue
                d = a.ad_basis(y2, y3)
                lhs = d.apply(inner)
                # [[x1,y2,y3],x2,x3] + [x1,[x2,y2,y3],x3] + [x1,x2,[x3,y2,y3]]
                rhs = a.ad_basis(x2, x3).apply(d.column(x1))
                rhs = add_vectors(rhs, a.ad_basis(x3, x1).apply(d.column(x2)))
                rhs = add_vectors(rhs, a.ad_basis(x1, x2).apply(d.column(x3)))
                residual = sub_vectors(lhs, rhs)
                if any(residual):
                    violations.append(((x1, x2, x3, y2, y3), residual))
    log.debug("fundamental identity on %s: %d violations", a.name, len(violations))
    return violations


def derived_algebra(a: Algebra) -> Subspace:
    return span([v for _, v in a.constants], a.dim)


def center(a: Algebra) -> Subspace:
    rows = [row for (i, j), m in a.ad_matrices.items() if i < j for row in m.rows]
    if not rows:
        return Subspace.full(a.dim)
    return nullspace(Matrix(len(rows), a.dim, tuple(rows)))


def _check_space(a: Algebra, s: Subspace):
    if s.ambient_dim != a.dim:
        raise DimensionMismatch(f"subspace of F^{s.ambient_dim} in {a.name} of dimension {a.dim}")


def is_ideal(a: Algebra, s: Subspace) -> bool:
    _check_space(a, s)
    return all(s.contains_vector(m.apply(b))
               for (i, j), m in a.ad_matrices.items() if i < j
               for b in s.vectors)


def is_subalgebra(a: Algebra, s: Subspace) -> bool:
    _check_space(a, s)
    return all(s.contains_vector(bracket(a, x, y, z)) for x, y, z in combinations(s.vectors, 3))


def is_abelian_subspace(a: Algebra, s: Subspace) -> bool:
    _check_space(a, s)
    return all(not any(bracket(a, x, y, z)) for x, y, z in combinations(s.vectors, 3))


def direct_sum(a: Algebra, b: Algebra) -> Algebra:
    """Blockwise sum; brackets mixing the two blocks vanish."""
    n = a.dim + b.dim
    brackets = {}
    for (i, j, k), v in a.constants:
        brackets[(i, j, k)] = tuple(v) + (Fraction(0),) * b.dim
    for (i, j, k), v in b.constants:
        brackets[(i + a.dim, j + a.dim, k + a.dim)] = (Fraction(0),) * a.dim + tuple(v)
    labels = list(a.labels) + [label if label not in a.labels else f"{label}'" for label in b.labels]
    if len(set(labels)) != n:
        labels = None
    return Algebra.from_brackets(n, brackets, labels, name=f"{a.name}+{b.name}")


def change_basis(a: Algebra, p: Matrix, name: str | None = None) -> Algebra:
    """Structure constants in the basis given by the columns of p."""
    if p.shape != (a.dim, a.dim):
        raise DimensionMismatch(f"change of basis {p.shape} for dimension {a.dim}")
    p_inv = inverse(p)
    columns = p.columns()
    brackets = {}
    for i, j, k in combinations(range(a.dim), 3):
        value = bracket(a, columns[i], columns[j], columns[k])
        if any(value):
            brackets[(i, j, k)] = p_inv.apply(value)
    return Algebra.from_brackets(a.dim, brackets, name=name or a.name)


def restrict_to_block(a: Algebra, indices: Sequence[int], name: str | None = None) -> Algebra:
    """The subalgebra spanned by the basis vectors with the given indices."""
    block = list(indices)
    position = {g: local for local, g in enumerate(block)}
    outside = [g for g in range(a.dim) if g not in position]
    brackets = {}
    for (i, j, k), v in a.constants:
        if i in position and j in position and k in position:
            if any(v[g] for g in outside):
                raise BlocksNotValid(f"basis block {[g + 1 for g in block]} is not a subalgebra")
            brackets[(position[i], position[j], position[k])] = tuple(v[g] for g in block)
    labels = [a.labels[g] for g in block] if a.labels else None
    return Algebra.from_brackets(len(block), brackets, labels, name=name or f"{a.name}[{','.join(str(g + 1) for g in block)}]")


def coordinate_block(n: int, indices: Sequence[int]) -> Subspace:
    return span([unit_vector(n, g) for g in indices], n)


def validate_blocks(a: Algebra, blocks: Sequence[Subspace]) -> None:
    """Raise BlocksNotValid unless the blocks are ideals with vanishing mixed brackets spanning a."""
    for s in blocks:
        _check_space(a, s)
    if not independent(blocks, a.dim) or sum(s.dim for s in blocks) != a.dim:
        raise BlocksNotValid("blocks do not form a direct sum equal to the algebra")
    for s in blocks:
        if not is_ideal(a, s):
            raise BlocksNotValid("a block is not an ideal")
    basis = [unit_vector(a.dim, k) for k in range(a.dim)]
    for p, q in combinations(range(len(blocks)), 2):
        for x in blocks[p].vectors:
            for y in blocks[q].vectors:
                if any(any(bracket(a, x, y, z)) for z in basis):
                    raise BlocksNotValid(f"blocks {p + 1} and {q + 1} have a nonzero mixed bracket")

