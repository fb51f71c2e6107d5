import logging
from fractions import Fraction
from itertools import product
from typing import Iterable

from ..algebras.algebra_models import Algebra, LinearMap
from ..linalg.linalg_models import Matrix, Subspace, Vector, add_vectors, sub_vectors
from ..linalg.linalg_ops import multiply_sparse, nullspace
from .cohomology_models import Cochain1, FiveTuple, TensorMap, triple_index

log = logging.getLogger(__name__)


def mu_matrix(a: Algebra) -> TensorMap:
    """The bracket as a linear map F^(n^3) -> F^n."""
    n = a.dim
    columns = [a.basis_bracket(i, j, k) for i, j, k in product(range(n), repeat=3)]
    return TensorMap(n, Matrix.from_columns(columns, n))


def mu_kernel(a: Algebra) -> Subspace:
    """Ker(μ) on the full tensor cube, symmetric tensors included."""
    kernel = nullspace(mu_matrix(a).matrix)
    log.debug("Ker(mu) of %s: dim %d of %d", a.name, kernel.dim, a.dim ** 3)
    return kernel


def _tensor(u, v, w, n: int) -> list[Fraction]:
    out = [Fraction(0)] * (n ** 3)
    for i, x in enumerate(u):
        if not x:
            continue
        for j, y in enumerate(v):
            if not y:
                continue
            for k, z in enumerate(w):
                if z:
                    out[triple_index(i, j, k, n)] += x * y * z
    return out


def f_star(a: Algebra, f: LinearMap) -> TensorMap:
    """f(v)⊗w⊗u + v⊗f(w)⊗u + v⊗w⊗f(u) on basis tensors."""
    n = a.dim
    unit = Matrix.identity(n).rows
    columns = []
    for i, j, k in product(range(n), repeat=3):
        terms = (_tensor(f.image_of_basis(i), unit[j], unit[k], n),
                 _tensor(unit[i], f.image_of_basis(j), unit[k], n),
                 _tensor(unit[i], unit[j], f.image_of_basis(k), n))
        columns.append([x + y + z for x, y, z in zip(*terms)])
    return TensorMap(n, Matrix.from_columns(columns, n ** 3))


def mu_after_f_star(a: Algebra, f: LinearMap) -> Matrix:
    """μ∘f*, column (i, j, k) = [f e_i, e_j, e_k] + [e_i, f e_j, e_k] + [e_i, e_j, f e_k]."""
    n = a.dim
    columns = []
    for i, j, k in product(range(n), repeat=3):
        v = a.ad_basis(j, k).apply(f.image_of_basis(i))
        v = add_vectors(v, a.ad_basis(k, i).apply(f.image_of_basis(j)))
        v = add_vectors(v, a.ad_basis(i, j).apply(f.image_of_basis(k)))
        columns.append(v)
    return Matrix.from_columns(columns, n)


class KernelCriterion:
    """Decides f ∈ QDer(a) by whether f* preserves Ker(μ)."""

    def __init__(self, a: Algebra):
        self.algebra = a
        self.kernel = mu_kernel(a)
        self._columns = self.kernel.basis.transpose()

    def accepts(self, f: LinearMap) -> bool:
        if self.kernel.dim == 0:
            return True
        return multiply_sparse(mu_after_f_star(self.algebra, f), self._columns).is_zero()


def is_qder_via_kernel(a: Algebra, f: LinearMap) -> bool:
    return KernelCriterion(a).accepts(f)


def delta0_adjoint(a: Algebra, f: LinearMap) -> Cochain1:
    """f([x1,x2,x3]) − [f x1, x2, x3] − [x1, f x2, x3] − [x1, x2, f x3] on ordered basis triples."""
    n = a.dim
    values = {}
    for i, j, k in product(range(n), repeat=3):
        v = f.apply(a.basis_bracket(i, j, k))
        v = sub_vectors(v, a.ad_basis(j, k).apply(f.image_of_basis(i)))
        v = sub_vectors(v, a.ad_basis(k, i).apply(f.image_of_basis(j)))
        v = sub_vectors(v, a.ad_basis(i, j).apply(f.image_of_basis(k)))
        if any(v):
            values[(i, j, k)] = v
    return Cochain1(n, values)


def delta0_trivial(a: Algebra, f: LinearMap) -> Cochain1:
    """f([x1, x2, x3]) on ordered basis triples."""
    n = a.dim
    values = {}
    for i, j, k in product(range(n), repeat=3):
        v = f.apply(a.basis_bracket(i, j, k))
        if any(v):
            values[(i, j, k)] = v
    return Cochain1(n, values)


def _trivial_part(a: Algebra, c: Cochain1, t: FiveTuple) -> Vector:
    """Σ c(.., [x_i, x4, x5], ..) − c([x1, x2, x3], x4, x5)."""
    x1, x2, x3, x4, x5 = t
    head = (x1, x2, x3)
    acc = (Fraction(0),) * a.dim
    for slot in range(3):
        inner = a.basis_bracket(head[slot], x4, x5)
        if any(inner):
            acc = add_vectors(acc, c.with_slot(head, slot, inner))
    outer = a.basis_bracket(x1, x2, x3)
    if any(outer):
        acc = sub_vectors(acc, c.with_slot((x1, x4, x5), 0, outer))
    return acc


def delta1_trivial(a: Algebra, c: Cochain1, tuples: Iterable[FiveTuple]) -> dict[FiveTuple, Vector]:
    """Nonzero values of the trivial-module coboundary on the given basis 5-tuples.

    The inner bracket replaces the argument in its own slot.
    """
    values = {}
    for t in tuples:
        v = _trivial_part(a, c, t)
        if any(v):
            values[t] = v
    return values


def delta1_adjoint(a: Algebra, c: Cochain1, tuples: Iterable[FiveTuple]) -> dict[FiveTuple, Vector]:
    """Nonzero values of the adjoint coboundary on the given basis 5-tuples."""
    values = {}
    for t in tuples:
        x1, x2, x3, x4, x5 = t
        v = _trivial_part(a, c, t)
        v = add_vectors(v, a.ad_basis(x2, x3).apply(c.at(x1, x4, x5)))
        v = add_vectors(v, a.ad_basis(x3, x1).apply(c.at(x2, x4, x5)))
        v = add_vectors(v, a.ad_basis(x1, x2).apply(c.at(x3, x4, x5)))
        v = sub_vectors(v, a.ad_basis(x4, x5).apply(c.at(x1, x2, x3)))
        if any(v):
            values[t] = v
    return values
