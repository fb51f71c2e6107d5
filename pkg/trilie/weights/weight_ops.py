import logging
from fractions import Fraction
from typing import Sequence

from ..algebras.algebra_models import Algebra, LinearMap
from ..algebras.algebra_ops import ad_map, bracket
from ..linalg import linalg_models
from ..linalg.linalg_models import Matrix, NonRationalSpectrum, Subspace, Vector, combine, unit_vector
from ..linalg.linalg_ops import commute, nullspace, restrict, simultaneous_eigenspaces, solve_affine, span
from ..maps.map_models import Ambient, MapSpace
from ..reports.report_models import CheckResult
from .weight_models import (
    DependentGenerators, NonDiagonalizable, NotAbelian, Torus, TorusNotCommuting, WeightDecomposition,
    WeightFunctional, ZeroWeightSpaceExceedsTorus,
)

log = logging.getLogger(__name__)


def torus_operators(a: Algebra, t: Torus) -> list[Matrix]:
    """ad(t_i, t_j) for generator pairs i < j."""
    return [ad_map(a, t.generators[i], t.generators[j]).matrix for i, j in t.pairs()]


def torus_span(a: Algebra, t: Torus) -> Subspace:
    return span(t.generators, a.dim)


def torus_coordinates(a: Algebra, t: Torus, v: Sequence[Fraction]) -> Vector | None:
    """Coefficients of v in the generator basis, or None when v is outside T."""
    if not t.generators:
        return () if not any(v) else None
    return solve_affine(Matrix.from_columns(t.generators, a.dim), v)


def _torus_findings(a: Algebra, t: Torus) -> list[tuple[type, CheckResult]]:
    findings = []
    for g in t.generators:
        a.check_vector(g)
    t_space = torus_span(a, t)
    findings.append((DependentGenerators, CheckResult(
        name="torus: generators are linearly independent", passed=t_space.dim == t.rank,
        detail=f"{t.rank} generators spanning dimension {t_space.dim}")))

    failures = []
    for i in range(t.rank):
        for j in range(i + 1, t.rank):
            for k in range(j + 1, t.rank):
                if any(bracket(a, t.generators[i], t.generators[j], t.generators[k])):
                    failures.append({"generators": [i + 1, j + 1, k + 1]})
    findings.append((NotAbelian, CheckResult(
        name="torus: [T, T, T] = 0", passed=not failures, detail=f"rank {t.rank}",
        witness=failures[0] if failures else None)))

    ops = torus_operators(a, t)
    pairs = t.pairs()
    failures = [{"left": [s + 1 for s in pairs[p]], "right": [s + 1 for s in pairs[q]]}
                for p in range(len(ops)) for q in range(p + 1, len(ops)) if not commute(ops[p], ops[q])]
    findings.append((TorusNotCommuting, CheckResult(
        name="torus: the operators ad(t_i, t_j) commute", passed=not failures,
        detail=f"{len(ops)} operators", witness=failures[0] if failures else None)))
    if failures:
        skipped = "skipped: operators do not commute"
        findings.append((NonDiagonalizable, CheckResult(
            name="torus: ad(t_i, t_j) are simultaneously diagonalizable over the rationals",
            passed=False, detail=skipped)))
        findings.append((ZeroWeightSpaceExceedsTorus, CheckResult(name="torus: A_0 = T", passed=False, detail=skipped)))
        return findings

    try:
        pieces = simultaneous_eigenspaces(ops, dim=a.dim)
    except (NonRationalSpectrum, linalg_models.NotDiagonalizable) as e:
        findings.append((NonDiagonalizable, CheckResult(
            name="torus: ad(t_i, t_j) are simultaneously diagonalizable over the rationals",
            passed=False, detail=e.detail)))
        findings.append((ZeroWeightSpaceExceedsTorus, CheckResult(
            name="torus: A_0 = T", passed=False, detail="skipped: no weight decomposition")))
        return findings
    findings.append((NonDiagonalizable, CheckResult(
        name="torus: ad(t_i, t_j) are simultaneously diagonalizable over the rationals",
        passed=True, detail=f"{len(pieces)} joint eigenspaces")))

    zero = tuple(Fraction(0) for _ in ops)
    zero_space = next((s for values, s in pieces if values == zero), Subspace.zero(a.dim))
    findings.append((ZeroWeightSpaceExceedsTorus, CheckResult(
        name="torus: A_0 = T", passed=zero_space == t_space,
        detail=f"dim A_0 = {zero_space.dim}, dim T = {t_space.dim}")))
    return findings


def validate_torus(a: Algebra, t: Torus) -> list[CheckResult]:
    """Every standing hypothesis on the torus, failed ones included."""
    return [check for _, check in _torus_findings(a, t)]


def require_valid_torus(a: Algebra, t: Torus) -> None:
    for error, check in _torus_findings(a, t):
        if not check.passed:
            raise error(f"{check.name} fails on {a.name}: {check.detail}")


def root_decomposition(a: Algebra, t: Torus) -> WeightDecomposition:
    """A = Σ A_γ over the joint eigenvalues γ of the ad(t_i, t_j); A_0 = T."""
    require_valid_torus(a, t)
    pieces = simultaneous_eigenspaces(torus_operators(a, t), dim=a.dim)
    entries = {WeightFunctional(values): space for values, space in pieces}
    decomposition = WeightDecomposition("algebra", a.dim, t.rank, entries)
    log.debug("roots of %s: %s", a.name, decomposition.dimensions())
    return decomposition


def fitting_one_part(roots: WeightDecomposition) -> Subspace:
    """Sum of the nonzero root spaces."""
    vectors = [v for w in roots.nonzero_weights() for v in roots.get(w).vectors]
    return span(vectors, roots.ambient_dim)


def hom_action(a: Algebra, t1: Sequence[Fraction], t2: Sequence[Fraction], f: LinearMap) -> LinearMap:
    """(t1, t2)f = ad(t1, t2)∘f − f∘ad(t1, t2)."""
    d = ad_map(a, t1, t2)
    return d.compose(f) - f.compose(d)


def hom_operator(a: Algebra, t1: Sequence[Fraction], t2: Sequence[Fraction]) -> Matrix:
    """Matrix of f -> (t1, t2)f on map coordinates."""
    n = a.dim
    size = n * n
    columns = [hom_action(a, t1, t2, LinearMap.from_coords(unit_vector(size, p), n)).to_coords()
               for p in range(size)]
    return Matrix.from_columns(columns, size)


def restricted_hom_operators(space: MapSpace, a: Algebra, t: Torus) -> list[Matrix]:
    """The operators (t_i, t_j) on an invariant map space, in the space's basis."""
    if space.ambient is not Ambient.HOM:
        raise ValueError(f"{space.kind.value} holds tuples of maps, not maps")
    return [restrict(hom_operator(a, t.generators[i], t.generators[j]), space.space) for i, j in t.pairs()]


def fitting_zero_is_kernel(op: Matrix) -> bool:
    """The generalized 0-eigenspace of op equals its kernel."""
    if op.nrows == 0:
        return True
    return nullspace(op.power(op.nrows)).dim == nullspace(op).dim


def weight_decomposition_of(space: MapSpace, a: Algebra, t: Torus) -> WeightDecomposition:
    ops = restricted_hom_operators(space, a, t)
    size = a.dim * a.dim
    entries = {}
    for values, local in simultaneous_eigenspaces(ops, dim=space.dim):
        vectors = [combine(c, space.space.vectors, size) for c in local.vectors]
        entries[WeightFunctional(values)] = span(vectors, size)
    decomposition = WeightDecomposition(space.kind.value, size, t.rank, entries)
    log.debug("weights of %s(%s): %s", space.kind.value, a.name, decomposition.dimensions())
    return decomposition


def maps_of(decomposition: WeightDecomposition, weight: WeightFunctional, n: int) -> list[LinearMap]:
    return [LinearMap.from_coords(v, n) for v in decomposition.get(weight).vectors]
