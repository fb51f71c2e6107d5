"""Closure, inclusion and decomposition properties of the derivation-type spaces."""
import logging
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Callable, Sequence

from ..algebras.algebra_models import Algebra, LinearMap
from ..algebras.algebra_ops import ad_map, bracket, is_ideal, restrict_to_block
from ..linalg.linalg_models import unit_vector
from ..linalg.linalg_ops import nullspace, span, subspace_contains, subspace_intersect, subspace_sum
from ..reports.report_models import CheckResult
from .map_models import GenDerQuadruple, MapSpace
from .map_spaces import AlgebraSpaces, gder, map_bracket, qder, split_gder

log = logging.getLogger(__name__)


def is_derivation(a: Algebra, f: LinearMap) -> tuple[int, int, int] | None:
    """First basis triple i<j<k where f breaks the Leibniz rule, or None."""
    n = a.dim
    e = [unit_vector(n, i) for i in range(n)]
    for i, j, k in combinations(range(n), 3):
        lhs = f.apply(bracket(a, e[i], e[j], e[k]))
        rhs = bracket(a, f.apply(e[i]), e[j], e[k])
        rhs = tuple(r + s + t for r, s, t in zip(
            rhs, bracket(a, e[i], f.apply(e[j]), e[k]), bracket(a, e[i], e[j], f.apply(e[k]))))
        if lhs != rhs:
            return i, j, k
    return None


def _check(name: str, failures: list, detail: str, sampled: bool = False) -> CheckResult:
    return CheckResult(name=name, passed=not failures, detail=detail,
                       witness=failures[0] if failures else None, sampled=sampled)


def _bracket_check(name: str, left: Sequence[LinearMap], right: Sequence[LinearMap],
                   accept: Callable[[LinearMap], bool], symmetric: bool = False) -> CheckResult:
    failures = []
    count = 0
    for p, f in enumerate(left):
        for q, g in enumerate(right):
            if symmetric and q <= p:
                continue
            count += 1
            if not accept(map_bracket(f, g)):
                failures.append({"left": p + 1, "right": q + 1})
    return _check(name, failures, f"{count} brackets of basis maps")


def _contains_check(name: str, outer: MapSpace, inner: MapSpace) -> CheckResult:
    ok = subspace_contains(outer.space, inner.space)
    return CheckResult(name=name, passed=ok, detail=f"dim {inner.dim} in dim {outer.dim}")


def closure_checks(sp: AlgebraSpaces) -> list[CheckResult]:
    """Each space is a Lie subalgebra of gl(A) under [f, g] = g∘f − f∘g; ad(A) is an ideal of Der(A)."""
    checks = []
    for label, space in (("Der", sp.der), ("QDer", sp.qder), ("GDer", sp.gder),
                         ("QCentroid", sp.quasicentroid), ("Centroid", sp.centroid)):
        basis = space.maps()
        checks.append(_bracket_check(f"closure: [{label}, {label}] in {label}", basis, basis,
                                     space.contains, symmetric=True))
    checks.append(_bracket_check("ideal: [Der, ad] in ad", sp.der.maps(), sp.inner_der.maps(),
                                 sp.inner_der.contains))
    return checks


def inclusion_checks(sp: AlgebraSpaces) -> list[CheckResult]:
    checks = [
        _contains_check("chain: ad in Der", sp.der, sp.inner_der),
        _contains_check("chain: Der in QDer", sp.qder, sp.der),
        _contains_check("chain: QDer in GDer", sp.gder, sp.qder),
        _contains_check("inclusion: ZDer in Der", sp.der, sp.zder),
        _contains_check("inclusion: QCentroid in GDer", sp.gder, sp.quasicentroid),
    ]
    both = subspace_intersect(sp.qder.space, sp.quasicentroid.space)
    checks.append(CheckResult(
        name="inclusion: Centroid in QDer ∩ QCentroid",
        passed=subspace_contains(both, sp.centroid.space),
        detail=f"dim {sp.centroid.dim} in dim {both.dim}"))
    checks.append(_bracket_check("inclusion: [Der, Centroid] in Centroid",
                                 sp.der.maps(), sp.centroid.maps(), sp.centroid.contains))
    checks.append(_bracket_check("inclusion: [QDer, QCentroid] in QCentroid",
                                 sp.qder.maps(), sp.quasicentroid.maps(), sp.quasicentroid.contains))

    n = sp.algebra.dim
    failures = []
    half = Fraction(-1, 2)
    for p, f in enumerate(sp.quasicentroid.maps()):
        witness = GenDerQuadruple(f, f.scale(half), f.scale(half), LinearMap.zero(n))
        if not sp.delta.contains_quadruple(witness):
            failures.append({"qcentroid_basis": p + 1})
    checks.append(_check("witness: (f, -f/2, -f/2, 0) in Delta for f in QCentroid", failures,
                         f"{sp.quasicentroid.dim} basis maps"))
    return checks


def _quadruple_bracket(q: GenDerQuadruple, r: GenDerQuadruple) -> GenDerQuadruple:
    return GenDerQuadruple(map_bracket(q.f1, r.f1), map_bracket(q.f2, r.f2),
                           map_bracket(q.f3, r.f3), map_bracket(q.fprime, r.fprime))


def decomposition_checks(sp: AlgebraSpaces, quadruple_limit: int = 12) -> list[CheckResult]:
    checks = []
    total = subspace_sum(sp.qder.space, sp.quasicentroid.space)
    checks.append(CheckResult(
        name="decomposition: GDer = QDer + QCentroid",
        passed=total == sp.gder.space,
        detail=f"dim {sp.qder.dim} + dim {sp.quasicentroid.dim} spans {total.dim}, GDer has dim {sp.gder.dim}"))
    qc = sp.quasicentroid.maps()
    checks.append(_bracket_check("ideal: [GDer, QCentroid] in QCentroid", sp.gder.maps(), qc,
                                 sp.quasicentroid.contains))
    if sp.center.dim == 0:
        checks.append(_bracket_check("abelian: [QCentroid, QCentroid] = 0 when Z(A) = 0", qc, qc,
                                     LinearMap.is_zero, symmetric=True))

    quadruples = sp.delta.quadruples()
    split_failures, symmetry_failures = [], []
    for p, q in enumerate(quadruples):
        pair, parts = split_gder(sp.algebra, q, sp.delta)
        if not (sp.qder_pairs.contains_pair(pair) and all(sp.quasicentroid.contains(g) for g in parts)
                and pair.f + parts[0] == q.f1):
            split_failures.append({"delta_basis": p + 1})
        for order in permutations(range(3)):
            maps = q.maps
            moved = GenDerQuadruple(maps[order[0]], maps[order[1]], maps[order[2]], q.fprime)
            if not sp.delta.contains_quadruple(moved):
                symmetry_failures.append({"delta_basis": p + 1, "order": [o + 1 for o in order]})
    checks.append(_check("split: quadruple = QDer pair + QCentroid parts", split_failures,
                         f"{len(quadruples)} basis quadruples"))
    checks.append(_check("symmetry: permuted quadruples stay in Delta", symmetry_failures,
                         f"{len(quadruples)} basis quadruples, 6 orders each"))

    head = quadruples[:quadruple_limit]
    bracket_failures = []
    for p, q in enumerate(head):
        for r_index in range(p + 1, len(head)):
            if not sp.delta.contains_quadruple(_quadruple_bracket(q, head[r_index])):
                bracket_failures.append({"left": p + 1, "right": r_index + 1})
    checks.append(_check("closure: componentwise bracket of quadruples in Delta", bracket_failures,
                         f"first {len(head)} of {len(quadruples)} basis quadruples",
                         sampled=len(head) < len(quadruples)))
    return checks


def embed_block_map(f: LinearMap, block: Sequence[int], n: int) -> LinearMap:
    """Extend a map on a coordinate block by zero on the other basis vectors."""
    images = [(Fraction(0),) * n for _ in range(n)]
    for local, source in enumerate(block):
        image = [Fraction(0)] * n
        for b, c in enumerate(f.image_of_basis(local)):
            image[block[b]] = c
        images[source] = tuple(image)
    return LinearMap.from_images(images, n)


def _embedded_space(space: MapSpace, block: Sequence[int], n: int) -> list:
    return [embed_block_map(f, block, n).to_coords() for f in space.maps()]


def direct_sum_checks(sp: AlgebraSpaces, blocks: Sequence[Sequence[int]]) -> list[CheckResult]:
    """For a centerless sum of coordinate blocks, GDer and QDer split blockwise."""
    a = sp.algebra
    n = a.dim
    if sp.center.dim != 0 or len(blocks) < 2:
        return []
    failures = []
    for p, f in enumerate(sp.gder.maps()):
        for block in blocks:
            outside = [g for g in range(n) if g not in block]
            if any(f.image_of_basis(s)[t] for s in block for t in outside):
                failures.append({"gder_basis": p + 1, "block": [g + 1 for g in block]})
                break
    checks = [_check("direct sum: GDer preserves every block", failures, f"{sp.gder.dim} basis maps")]

    parts = [restrict_to_block(a, block) for block in blocks]
    for label, whole, local in (("GDer", sp.gder, gder), ("QDer", sp.qder, qder)):
        vectors = []
        for block, part in zip(blocks, parts):
            vectors.extend(_embedded_space(local(part), block, n))
        blockwise = span(vectors, n * n)
        checks.append(CheckResult(
            name=f"direct sum: {label} is the sum of the block {label} spaces",
            passed=blockwise == whole.space,
            detail=f"blockwise dim {blockwise.dim}, whole dim {whole.dim}"))
    return checks


def module_action(a: Algebra, i: int, j: int, f: LinearMap) -> LinearMap:
    """((e_i, e_j) f) = ad(e_i, e_j)∘f − f∘ad(e_i, e_j)."""
    d = LinearMap(a.ad_basis(i, j))
    return d.compose(f) - f.compose(d)


def qcentroid_module_checks(sp: AlgebraSpaces, max_power: int = 3) -> list[CheckResult]:
    """Identities satisfied by quasicentroid maps acting on basis elements."""
    a = sp.algebra
    n = a.dim
    e = [unit_vector(n, i) for i in range(n)]
    qc = sp.quasicentroid.maps()
    checks = []

    failures = []
    for p, f in enumerate(qc):
        for i, j in combinations(range(n), 2):
            if not sp.quasicentroid.contains(module_action(a, i, j, f)):
                failures.append({"qcentroid_basis": p + 1, "pair": [i + 1, j + 1]})
    checks.append(_check("module: ad(x,y)f - f ad(x,y) in QCentroid", failures,
                         f"{len(qc)} basis maps"))

    isotropy, commuting, powers, shifted, cyclic = [], [], [], [], []
    for p, f in enumerate(qc):
        for x, y in product(range(n), repeat=2):
            if x == y:
                continue
            fx = f.apply(e[x])
            if any(bracket(a, e[x], fx, e[y])):
                isotropy.append({"qcentroid_basis": p + 1, "x": x + 1, "y": y + 1})
            adxy = LinearMap(a.ad_basis(x, y))
            adfxy = ad_map(a, fx, e[y])
            if adxy.compose(adfxy) != adfxy.compose(adxy):
                commuting.append({"qcentroid_basis": p + 1, "x": x + 1, "y": y + 1})
            for m in range(1, max_power + 1):
                if adfxy.power(m) != adxy.power(m).compose(f.power(m)):
                    powers.append({"qcentroid_basis": p + 1, "x": x + 1, "y": y + 1, "m": m})
                if adxy.power(m + 1).compose(f) != adfxy.compose(adxy.power(m)):
                    shifted.append({"qcentroid_basis": p + 1, "x": x + 1, "y": y + 1, "m": m})
        for x, y, z in product(range(n), repeat=3):
            values = (module_action(a, x, y, f).apply(e[z]),
                      module_action(a, y, z, f).apply(e[x]),
                      module_action(a, z, x, f).apply(e[y]))
            if not values[0] == values[1] == values[2]:
                cyclic.append({"qcentroid_basis": p + 1, "triple": [x + 1, y + 1, z + 1]})
    detail = f"{len(qc)} basis maps, all basis pairs"
    checks.append(_check("qcentroid: [x, f(x), y] = 0", isotropy, detail))
    checks.append(_check("qcentroid: ad(x,y) commutes with ad(f(x),y)", commuting, detail))
    checks.append(_check(f"qcentroid: ad^m(f(x),y) = ad^m(x,y) f^m for m <= {max_power}", powers, detail))
    checks.append(_check(f"qcentroid: ad^(m+1)(x,y) f = ad(f(x),y) ad^m(x,y) for m <= {max_power}",
                         shifted, detail))
    checks.append(_check("qcentroid: ((x,y)f)(z) is cyclic in x, y, z", cyclic, f"{len(qc)} basis maps, all basis triples"))

    cent = sp.centroid.maps()
    into_center = []
    for p, g in enumerate(cent):
        for q, f in enumerate(qc):
            h = map_bracket(g, f)
            if not all(sp.center.contains_vector(v) for v in h.images()):
                into_center.append({"centroid_basis": p + 1, "qcentroid_basis": q + 1})
    checks.append(_check("centroid: [Centroid, QCentroid] maps A into Z(A)", into_center,
                         f"{len(cent) * len(qc)} pairs of basis maps"))

    ideals = []
    for p, g in enumerate(cent):
        kernel = nullspace(g.matrix)
        image = span(g.images(), n)
        if not (is_ideal(a, kernel) and is_ideal(a, image)):
            ideals.append({"centroid_basis": p + 1})
    checks.append(_check("centroid: kernel and image are ideals", ideals, f"{len(cent)} basis maps"))

    composition = []
    for p, g in enumerate(cent):
        for q, h in enumerate(cent):
            if not sp.centroid.contains(g.compose(h)):
                composition.append({"left": p + 1, "right": q + 1})
    checks.append(_check("centroid: closed under composition", composition,
                         f"{len(cent) ** 2} products of basis maps"))

    if sp.center.dim == 0:
        commute = []
        for p, g in enumerate(cent):
            for q, f in enumerate(qc):
                if g.compose(f) != f.compose(g):
                    commute.append({"centroid_basis": p + 1, "qcentroid_basis": q + 1})
        checks.append(_check("centroid: commutes with QCentroid when Z(A) = 0", commute,
                             f"{len(cent) * len(qc)} pairs of basis maps"))
    return checks

