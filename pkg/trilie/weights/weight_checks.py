"""Structure of quasiderivations and quasicentroid maps relative to a torus."""
import logging
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence

from ..algebras.algebra_models import Algebra, LinearMap
from ..algebras.algebra_ops import ad_map, bracket, center, change_basis, restrict_to_block, validate_blocks
from ..linalg.linalg_models import Matrix, Subspace, unit_vector
from ..linalg.linalg_ops import inverse, nullspace, span, subspace_contains, subspace_intersect
from ..maps.map_checks import embed_block_map
from ..maps.map_models import QDerPair
from ..maps.map_spaces import AlgebraSpaces, quasicentroid
from ..reports.report_models import CheckResult
from .weight_models import Torus, WeightDecomposition
from .weight_ops import (
    fitting_one_part, fitting_zero_is_kernel, hom_action, maps_of, restricted_hom_operators, root_decomposition,
    torus_coordinates, weight_decomposition_of,
)

log = logging.getLogger(__name__)


def _check(name: str, failures: list, detail: str) -> CheckResult:
    return CheckResult(name=name, passed=not failures, detail=detail, witness=failures[0] if failures else None)


def centralizer_of_torus(a: Algebra, t: Torus) -> Subspace:
    """Z_A(T) = {x : [x, T, A] = 0}."""
    n = a.dim
    rows = []
    for g in t.generators:
        for k in range(n):
            rows.extend(ad_map(a, g, unit_vector(n, k)).matrix.rows)
    if not rows:
        return Subspace.full(n)
    return nullspace(Matrix.from_rows(rows, n))


def _nonzero_part_maps(dec: WeightDecomposition, n: int) -> list[LinearMap]:
    return [f for w in dec.nonzero_weights() for f in maps_of(dec, w, n)]


def _diagonality_checks(sp: AlgebraSpaces, t: Torus, qd: WeightDecomposition) -> list[CheckResult]:
    a = sp.algebra
    checks = []
    for label, space in (("QDer", sp.qder), ("QΓ", sp.quasicentroid)):
        ops = restricted_hom_operators(space, a, t)
        failures = [{"generator_pair": [i + 1, j + 1]} for op, (i, j) in zip(ops, t.pairs())
                    if not fitting_zero_is_kernel(op)]
        checks.append(_check(f"diagonal: the Fitting null part of {label} is the kernel of each (t_i, t_j)",
                             failures, f"{len(ops)} operators on dim {space.dim}"))
    failures = []
    for p, f in enumerate(maps_of(qd, qd.zero_weight, a.dim)):
        for i, j in t.pairs():
            if not hom_action(a, t.generators[i], t.generators[j], f).is_zero():
                failures.append({"qder0_basis": p + 1, "generator_pair": [i + 1, j + 1]})
    checks.append(_check("diagonal: (T, T) kills QDer_0", failures, f"dim QDer_0 = {qd.zero_part.dim}"))
    return checks


def _weight_shift_checks(a: Algebra, roots: WeightDecomposition,
                         decompositions: Sequence[tuple[str, WeightDecomposition]]) -> list[CheckResult]:
    checks = []
    for label, dec in decompositions:
        failures = []
        count = 0
        for alpha in dec.entries:
            for p, f in enumerate(maps_of(dec, alpha, a.dim)):
                for gamma, root_space in roots.entries.items():
                    target = roots.get(alpha + gamma)
                    for x in root_space.vectors:
                        count += 1
                        if not target.contains_vector(f.apply(x)):
                            failures.append({"weight": alpha.label(), "root": gamma.label(), "basis": p + 1})
        checks.append(_check(f"weights: {label}_α(A_γ) in A_(α+γ)", failures, f"{count} images"))
    return checks


def _images_in(maps: Sequence[LinearMap], sources: Sequence, target: Subspace) -> list:
    return [{"basis": p + 1, "vector": s + 1} for p, f in enumerate(maps)
            for s, x in enumerate(sources) if not target.contains_vector(f.apply(x))]


def _qcentroid_torus_checks(a: Algebra, t: Torus, roots: WeightDecomposition,
                            qg: WeightDecomposition, sp: AlgebraSpaces) -> list[CheckResult]:
    n = a.dim
    t_space = roots.zero_part
    a1 = fitting_one_part(roots)
    all_maps = sp.quasicentroid.maps()
    zero_maps = maps_of(qg, qg.zero_weight, n)
    one_maps = _nonzero_part_maps(qg, n)
    checks = [
        _check("quasicentroid: QΓ(T) in T", _images_in(all_maps, t_space.vectors, t_space),
               f"{len(all_maps)} basis maps"),
        _check("quasicentroid: QΓ_0(A_1) in A_1", _images_in(zero_maps, a1.vectors, a1),
               f"dim A_1 = {a1.dim}"),
        _check("quasicentroid: QΓ_1(T) = 0", _images_in(one_maps, t_space.vectors, Subspace.zero(n)),
               f"{len(one_maps)} basis maps of nonzero weight"),
    ]
    centralizer = centralizer_of_torus(a, t)
    checks.append(_check("quasicentroid: QΓ_1(A) in Z_A(T)",
                         _images_in(one_maps, [unit_vector(n, k) for k in range(n)], centralizer),
                         f"dim Z_A(T) = {centralizer.dim}"))

    failures = []
    entries = [(w, s) for w, s in roots.entries.items() if s.dim]
    for (alpha, xs), (beta, ys) in ((u, v) for u in entries for v in entries):
        if (alpha + beta).is_zero():
            continue
        for x in xs.vectors:
            for y in ys.vectors:
                for p, f in enumerate(zero_maps):
                    if not hom_action(a, x, y, f).is_zero():
                        failures.append({"roots": [alpha.label(), beta.label()], "qcentroid0_basis": p + 1})
    checks.append(_check("quasicentroid: (A_α, A_β)QΓ_0 = 0 when α + β ≠ 0", failures,
                         f"{len(entries)} root spaces, {len(zero_maps)} maps"))

    failures = []
    for alpha, xs in entries:
        if alpha.is_zero():
            continue
        ys = roots.get(-alpha)
        for x in xs.vectors:
            for y in ys.vectors:
                for p, f in enumerate(zero_maps):
                    d = hom_action(a, x, y, f)
                    if any(any(d.apply(z)) for z in a1.vectors):
                        failures.append({"root": alpha.label(), "qcentroid0_basis": p + 1})
    checks.append(_check("quasicentroid: (A_α, A_-α)QΓ_0(A_1) = 0", failures,
                         f"{len(entries)} root spaces"))

    failures = []
    for alpha, xs in entries:
        for x in xs.vectors:
            for y in roots.get(-alpha).vectors:
                for p, f in enumerate(zero_maps):
                    if not qg.zero_part.contains_vector(hom_action(a, x, y, f).to_coords()):
                        failures.append({"root": alpha.label(), "qcentroid0_basis": p + 1})
    checks.append(_check("quasicentroid: (A_α, A_-α)QΓ_0 in QΓ_0", failures,
                         f"dim QΓ_0 = {qg.zero_part.dim}"))

    failures = []
    for p, f in enumerate(zero_maps):
        for s, u in enumerate(t_space.vectors):
            for x in a1.vectors:
                d = hom_action(a, u, x, f)
                if any(any(d.apply(v)) for v in t_space.vectors):
                    failures.append({"qcentroid0_basis": p + 1, "torus_basis": s + 1})
    checks.append(_check("quasicentroid: ((t, x)QΓ_0)(T) = 0 for x in A_1", failures,
                         f"{len(zero_maps)} maps"))

    e = [unit_vector(n, k) for k in range(n)]
    failures = []
    for p, f in enumerate(all_maps):
        for i, j in combinations(range(n), 2):
            d = hom_action(a, e[i], e[j], f)
            for k in range(n):
                lhs = tuple(u + v for u, v in zip(d.apply(e[k]), f.apply(bracket(a, e[i], e[j], e[k]))))
                if lhs != bracket(a, e[i], e[j], f.apply(e[k])):
                    failures.append({"basis": p + 1, "elements": [i + 1, j + 1, k + 1]})
    checks.append(_check("quasicentroid: ((x, y)f)(z) + f([x, y, z]) = [x, y, f(z)]", failures,
                         f"{len(all_maps)} basis maps"))

    if sp.center.dim == 0:
        checks.append(CheckResult(name="quasicentroid: QΓ_0 = Γ when Z(A) = 0",
                                  passed=qg.zero_part == sp.centroid.space,
                                  detail=f"dim QΓ_0 = {qg.zero_part.dim}, dim Γ = {sp.centroid.dim}"))
        failures = [{"left": p + 1, "right": q + 1} for p, f in enumerate(one_maps)
                    for q, g in enumerate(one_maps) if not f.compose(g).is_zero()]
        checks.append(_check("quasicentroid: QΓ_1 QΓ_1 = 0 when Z(A) = 0", failures,
                             f"{len(one_maps)} basis maps of nonzero weight"))
    return checks


def _torus_action_checks(a: Algebra, t: Torus, sp: AlgebraSpaces, max_power: int) -> list[CheckResult]:
    n = a.dim
    pairs = t.pairs()
    gens = t.generators
    checks = []

    failures = []
    for p, pair in enumerate(sp.qder_pairs.pairs()):
        for i, j in pairs:
            moved = QDerPair(hom_action(a, gens[i], gens[j], pair.f), hom_action(a, gens[i], gens[j], pair.fprime))
            if not sp.qder_pairs.contains_pair(moved):
                failures.append({"pair_basis": p + 1, "generator_pair": [i + 1, j + 1]})
    checks.append(_check("torus action: (T, T) maps QDer pairs to QDer pairs", failures,
                         f"{sp.qder_pairs.dim} basis pairs"))

    qder_maps = sp.qder.maps()
    failures = []
    for (i, j), (k, l) in combinations(pairs, 2):
        for p, f in enumerate(qder_maps):
            left = hom_action(a, gens[i], gens[j], hom_action(a, gens[k], gens[l], f))
            right = hom_action(a, gens[k], gens[l], hom_action(a, gens[i], gens[j], f))
            if left != right:
                failures.append({"qder_basis": p + 1, "generator_pairs": [[i + 1, j + 1], [k + 1, l + 1]]})
    checks.append(_check("torus action: the operators (t_i, t_j) commute on QDer", failures,
                         f"{len(pairs)} generator pairs"))

    failures = []
    e = [unit_vector(n, k) for k in range(n)]
    for i, j in pairs:
        d = ad_map(a, gens[i], gens[j])
        powers = [d.power(k) for k in range(max_power + 1)]
        for p, f in enumerate(qder_maps):
            acted = f
            for power in range(1, max_power + 1):
                acted = hom_action(a, gens[i], gens[j], acted)
                for x in e:
                    expected = [Fraction(0)] * n
                    for k in range(power + 1):
                        term = powers[power - k].apply(f.apply(powers[k].apply(x)))
                        sign = (-1) ** k * comb(power, k)
                        expected = [u + sign * v for u, v in zip(expected, term)]
                    if acted.apply(x) != tuple(expected):
                        failures.append({"qder_basis": p + 1, "generator_pair": [i + 1, j + 1], "power": power})
                        break
    checks.append(_check("torus action: binomial expansion of (t1, t2)^m f", failures,
                         f"powers 1..{max_power}"))
    return checks


def _der_weight_zero_check(a: Algebra, t: Torus, roots: WeightDecomposition,
                           qd: WeightDecomposition, sp: AlgebraSpaces) -> CheckResult:
    both = subspace_intersect(qd.zero_part, sp.der.space)
    rank = t.rank
    unit = [tuple(Fraction(int(r == c)) for c in range(rank)) for r in range(rank)]
    failures = []
    for p, v in enumerate(both.vectors):
        f = LinearMap.from_coords(v, a.dim)
        images = [torus_coordinates(a, t, f.apply(g)) for g in t.generators]
        if any(c is None for c in images):
            failures.append({"basis": p + 1, "reason": "f(T) not in T"})
            continue
        for gamma in roots.nonzero_weights():
            for i, j in t.pairs():
                if gamma.evaluate(images[i], unit[j]) + gamma.evaluate(unit[i], images[j]):
                    failures.append({"basis": p + 1, "root": gamma.label(), "generator_pair": [i + 1, j + 1]})
    return _check("weights: γ(f(t1), t2) + γ(t1, f(t2)) = 0 for f in QDer_0 ∩ Der", failures,
                  f"dim QDer_0 ∩ Der = {both.dim}")


def structure_checks(a: Algebra, t: Torus, sp: AlgebraSpaces | None = None,
                     max_power: int = 3) -> tuple[list[CheckResult], dict]:
    """Weight decompositions of A, QDer(A) and QΓ(A) and the properties relating them."""
    sp = sp or AlgebraSpaces(a)
    roots = root_decomposition(a, t)
    qd = weight_decomposition_of(sp.qder, a, t)
    qg = weight_decomposition_of(sp.quasicentroid, a, t)

    checks = _diagonality_checks(sp, t, qd)
    checks += _weight_shift_checks(a, roots, (("QDer", qd), ("QΓ", qg)))
    checks += _qcentroid_torus_checks(a, t, roots, qg, sp)
    checks += _torus_action_checks(a, t, sp, max_power)
    checks.append(_der_weight_zero_check(a, t, roots, qd, sp))

    relations = {w.label(): {"in_der": subspace_contains(sp.der.space, s)} for w, s in qd.entries.items()}
    result = {
        "roots": roots.dimensions(),
        "fitting_one_part": fitting_one_part(roots).dim,
        "qder_weights": qd.dimensions(),
        "qcentroid_weights": qg.dimensions(),
        "qder_weight_in_der": relations,
        "der_in_qder_0": subspace_contains(qd.zero_part, sp.der.space),
    }
    log.info("structure checks on %s: %d checks", a.name, len(checks))
    return checks, result


def _adapted(a: Algebra, blocks: Sequence[Subspace]) -> tuple[Algebra, Matrix, list[list[int]]]:
    """The algebra in a basis made of the block bases, and the coordinate block of each."""
    n = a.dim
    p = Matrix.from_columns([v for s in blocks for v in s.vectors], n)
    indices, start = [], 0
    for s in blocks:
        indices.append(list(range(start, start + s.dim)))
        start += s.dim
    if p == Matrix.identity(n):
        return a, p, indices
    return change_basis(a, p, name=f"{a.name} (block basis)"), p, indices


def check_sum_decomposable(a: Algebra, blocks: Sequence[Subspace],
                           sp: AlgebraSpaces | None = None) -> tuple[list[CheckResult], dict]:
    """QΓ(A) = Σ QΓ(A_i) + Σ_{i≠j} Γ_ij for A the direct sum of the blocks.

    Γ_ij holds the maps sending A_i into Z(A_j) and the other blocks to zero.
    """
    validate_blocks(a, blocks)
    n = a.dim
    adapted, p, indices = _adapted(a, blocks)
    parts = [restrict_to_block(adapted, block) for block in indices]
    local_maps = []
    block_dims = []
    for block, part in zip(indices, parts):
        own = quasicentroid(part)
        block_dims.append(own.dim)
        local_maps.extend(embed_block_map(f, block, n) for f in own.maps())
    cross = 0
    for i, source in enumerate(indices):
        for j, target in enumerate(indices):
            if i == j:
                continue
            for z in center(parts[j]).vectors:
                image = [Fraction(0)] * n
                for local, c in enumerate(z):
                    image[target[local]] = c
                for s in source:
                    images = [(Fraction(0),) * n for _ in range(n)]
                    images[s] = tuple(image)
                    local_maps.append(LinearMap.from_images(images, n))
                    cross += 1

    if adapted is not a:
        p_inv = inverse(p)
        local_maps = [LinearMap(p @ f.matrix @ p_inv) for f in local_maps]
    formula = span([f.to_coords() for f in local_maps], n * n)
    whole = sp.quasicentroid if sp else quasicentroid(a)
    check = CheckResult(
        name="decomposable: QΓ(A) = Σ QΓ(A_i) + Σ Γ_ij",
        passed=formula == whole.space,
        detail=f"formula dim {formula.dim}, QΓ(A) dim {whole.dim}")
    return [check], {"block_qcentroid_dims": block_dims, "cross_maps": cross, "qcentroid": whole.dim}
