import logging
import random
from fractions import Fraction
from itertools import product
from typing import Sequence

from ..algebras.algebra_models import Algebra, LinearMap
from ..linalg.linalg_ops import solve_rows
from ..maps.map_spaces import AlgebraSpaces
from ..reports.report_models import CheckResult
from .cohomology_models import Cochain1, FiveTuple
from .cohomology_ops import (
    KernelCriterion, delta0_adjoint, delta0_trivial, delta1_adjoint, delta1_trivial,
)

log = logging.getLogger(__name__)


def five_tuples(n: int, max_exhaustive: int, sample_size: int, seed: int) -> tuple[list[FiveTuple], bool]:
    """All basis 5-tuples when n <= max_exhaustive, otherwise a seeded sample.

    The flag is True for a sample.
    """
    if n <= max_exhaustive:
        return list(product(range(n), repeat=5)), False
    rng = random.Random(seed)
    log.info("sampling %d of %d basis 5-tuples", sample_size, n ** 5)
    return [tuple(rng.randrange(n) for _ in range(5)) for _ in range(sample_size)], True


def random_map(rng: random.Random, n: int, bound: int = 3) -> LinearMap:
    coords = [Fraction(rng.randint(-bound, bound)) for _ in range(n * n)]
    return LinearMap.from_coords(coords, n)


def random_combination(rng: random.Random, maps: Sequence[LinearMap], n: int, bound: int = 3) -> LinearMap:
    acc = LinearMap.zero(n)
    for f in maps:
        c = rng.randint(-bound, bound)
        if c:
            acc = acc + f.scale(c)
    return acc


def trivial_coboundary_preimage(a: Algebra, c: Cochain1) -> LinearMap | None:
    """Some g with g([x, y, z]) = c(x, y, z) on every ordered basis triple, or None."""
    n = a.dim
    rows, rhs = [], []
    for i, j, k in product(range(n), repeat=3):
        value = c.at(i, j, k)
        inner = a.basis_bracket(i, j, k)
        for l in range(n):
            row = {m * n + l: x for m, x in enumerate(inner) if x}
            if row or value[l]:
                rows.append(row)
                rhs.append(value[l])
    if not rows:
        return LinearMap.zero(n)
    solution = solve_rows(rows, rhs, n * n)
    return None if solution is None else LinearMap.from_coords(solution, n)


def _probe_maps(sp: AlgebraSpaces) -> list[LinearMap]:
    n = sp.algebra.dim
    return sp.qder.maps() + [LinearMap.elementary(i, j, n) for i in range(n) for j in range(n)]


def coboundary_checks(sp: AlgebraSpaces, tuples: Sequence[FiveTuple], sampled: bool) -> list[CheckResult]:
    """δ0(f) = δ̇0(f − f') for pairs, the converse via solvability, and the identity for f − f'."""
    a = sp.algebra
    pairs = sp.qder_pairs.pairs()
    checks = []

    failures = []
    for p, pair in enumerate(pairs):
        if not (delta0_adjoint(a, pair.f) - delta0_trivial(a, pair.f - pair.fprime)).is_zero():
            failures.append({"pair_basis": p + 1})
    checks.append(CheckResult(name="coboundary: δ0(f) = δ̇0(f - f') for QDer pairs", passed=not failures,
                              detail=f"{len(pairs)} basis pairs", witness=failures[0] if failures else None))

    failures = []
    probes = _probe_maps(sp)
    for p, f in enumerate(probes):
        realizable = trivial_coboundary_preimage(a, delta0_adjoint(a, f)) is not None
        if realizable != sp.qder.contains(f):
            failures.append({"probe": p + 1, "realizable": realizable})
    checks.append(CheckResult(name="coboundary: δ0(f) in B1(A, Ȧ) exactly when f in QDer", passed=not failures,
                              detail=f"{len(probes)} maps (QDer basis and elementary maps)",
                              witness=failures[0] if failures else None))

    active = _active_triples(a)
    failures = []
    count = 0
    for p, pair in enumerate(pairs):
        h = pair.f - pair.fprime
        for t in tuples:
            x, y, z, u, v = t
            if not ({(x, y, z), (x, u, v), (y, u, v), (z, u, v)} & active):
                continue
            count += 1
            lhs = a.ad_basis(u, v).apply(h.apply(a.basis_bracket(x, y, z)))
            rhs = a.ad_basis(y, z).apply(h.apply(a.basis_bracket(x, u, v)))
            rhs = [r + s for r, s in zip(rhs, a.ad_basis(z, x).apply(h.apply(a.basis_bracket(y, u, v))))]
            rhs = tuple(r + s for r, s in zip(rhs, a.ad_basis(x, y).apply(h.apply(a.basis_bracket(z, u, v)))))
            if lhs != rhs:
                failures.append({"pair_basis": p + 1, "tuple": [s + 1 for s in t]})
                break
    checks.append(CheckResult(name="coboundary: f - f' satisfies [h[x,y,z],u,v] = Σ[.., h[., u, v], ..]",
                              passed=not failures,
                              detail=f"{len(pairs)} basis pairs, {len(tuples)} basis 5-tuples ({count} with a nonzero bracket)",
                              witness=failures[0] if failures else None, sampled=sampled))
    return checks


def _active_triples(a: Algebra) -> set:
    return {t for t in product(range(a.dim), repeat=3) if any(a.basis_bracket(*t))}


def complex_checks(a: Algebra, maps: Sequence[LinearMap], tuples: Sequence[FiveTuple], sampled: bool) -> list[CheckResult]:
    """δ1∘δ0 = 0 for both modules on the given maps."""
    adjoint, trivial = [], []
    for p, f in enumerate(maps):
        bad = delta1_adjoint(a, delta0_adjoint(a, f), tuples)
        if bad:
            adjoint.append({"map": p + 1, "tuple": [s + 1 for s in next(iter(bad))]})
        bad = delta1_trivial(a, delta0_trivial(a, f), tuples)
        if bad:
            trivial.append({"map": p + 1, "tuple": [s + 1 for s in next(iter(bad))]})
    detail = f"{len(maps)} maps, {len(tuples)} basis 5-tuples"
    return [
        CheckResult(name="complex: δ1∘δ0 = 0 (adjoint module)", passed=not adjoint, detail=detail,
                    witness=adjoint[0] if adjoint else None, sampled=sampled),
        CheckResult(name="complex: δ̇1∘δ̇0 = 0 (trivial module)", passed=not trivial, detail=detail,
                    witness=trivial[0] if trivial else None, sampled=sampled),
    ]


def kernel_audit(sp: AlgebraSpaces, random_maps: int, seed: int, extra: Sequence[LinearMap] = ()) -> tuple[list[CheckResult], dict]:
    """Compares the Ker(μ) criterion with membership in QDer.

    Probes are the QDer basis, any extra maps, and random maps of which
    half are drawn from gl(A) and half from QDer(A).
    """
    a = sp.algebra
    n = a.dim
    rng = random.Random(seed)
    qder_basis = sp.qder.maps()
    probes = list(qder_basis) + list(extra)
    for r in range(random_maps):
        probes.append(random_map(rng, n) if r % 2 == 0 else random_combination(rng, qder_basis, n))
    criterion = KernelCriterion(a)
    disagreements = []
    accepted = 0
    for p, f in enumerate(probes):
        via_kernel = criterion.accepts(f)
        accepted += via_kernel
        if via_kernel != sp.qder.contains(f):
            disagreements.append({"probe": p + 1, "kernel_criterion": via_kernel})
    check = CheckResult(
        name="kernel: f*(Ker μ) in Ker μ exactly when f in QDer",
        passed=not disagreements,
        detail=f"{len(probes)} maps: {len(qder_basis)} QDer basis, {len(extra)} given, {random_maps} random (seed {seed})",
        witness=disagreements[0] if disagreements else None)
    summary = {"ker_mu_dim": criterion.kernel.dim, "probes": len(probes), "accepted": accepted,
               "agreement": len(probes) - len(disagreements)}
    return [check], summary
