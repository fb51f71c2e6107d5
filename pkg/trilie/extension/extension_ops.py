import logging
from fractions import Fraction
from itertools import combinations

from ..algebras.algebra_models import Algebra, LinearMap
from ..algebras.algebra_ops import center, coordinate_block, derived_algebra
from ..linalg.linalg_models import Subspace
from ..linalg.linalg_ops import (
    nullspace_of_rows, span, subspace_complement, subspace_contains, subspace_intersect, subspace_sum,
)
from ..maps.map_checks import is_derivation
from ..maps.map_models import MapSpace, QDerPair
from ..maps.map_spaces import AlgebraSpaces, der, map_bracket, qder_pairs, zder
from ..reports.report_models import CheckResult
from .extension_models import CenterNotZero, ExtendedAlgebra, InvalidPair

log = logging.getLogger(__name__)


def extend(a: Algebra) -> ExtendedAlgebra:
    """[a1 t, a2 t, a3 t] = [a1, a2, a3] t^3; every other bracket vanishes."""
    n = a.dim
    brackets = {}
    for (i, j, k), value in a.constants:
        brackets[(i, j, k)] = (Fraction(0),) * (2 * n) + tuple(value)
    labels = [f"{label}{suffix}" for suffix in ("t", "t2", "t3") for label in a.labels]
    if len(set(labels)) != 3 * n:
        labels = None
    extended = Algebra.from_brackets(3 * n, brackets, labels, name=f"{a.name}~")
    derived = derived_algebra(a)
    log.debug("extended %s to dimension %d", a.name, 3 * n)
    return ExtendedAlgebra(a, extended, subspace_complement(derived), derived)


def embed_qder(e: ExtendedAlgebra, p: QDerPair, pairs: MapSpace | None = None) -> LinearMap:
    """l_u(f)(at + bt^2 + ct^3 + ut^3) = f(a)t + f'(c)t^3 with c in A¹ and u in U."""
    pairs = pairs or qder_pairs(e.base)
    if p.f.dim != e.n or not pairs.contains_pair(p):
        raise InvalidPair(f"not a quasiderivation pair of {e.base.name}")
    n = e.n
    zero = (Fraction(0),) * (3 * n)
    images = [zero] * (3 * n)
    for i in range(n):
        images[i] = tuple(p.f.image_of_basis(i)) + (Fraction(0),) * (2 * n)
    projection = e.derived_projection
    for i in range(n):
        image = p.fprime.apply(projection.column(i))
        images[2 * n + i] = (Fraction(0),) * (2 * n) + tuple(image)
    return LinearMap.from_images(images, 3 * n)


def zder_center_of_extension(e: ExtendedAlgebra) -> Subspace:
    """ZDer of the extension: maps into Z(Ã) that vanish on Ã¹."""
    return zder(e.algebra).space


def _embedded(e: ExtendedAlgebra, pairs: MapSpace) -> list[LinearMap]:
    return [embed_qder(e, p, pairs) for p in pairs.pairs()]


def embedding_checks(e: ExtendedAlgebra, sp: AlgebraSpaces, homomorphism_limit: int = 8) -> list[CheckResult]:
    """Properties of l_u that hold for every base algebra."""
    n = e.n
    pairs = sp.qder_pairs
    embedded = _embedded(e, pairs)
    checks = []

    failures = []
    for p, d in enumerate(embedded):
        triple = is_derivation(e.algebra, d)
        if triple is not None:
            failures.append({"pair_basis": p + 1, "triple": [t + 1 for t in triple]})
    checks.append(CheckResult(name="embedding: l_u(f) is a derivation of the extension",
                              passed=not failures, detail=f"{len(embedded)} basis pairs",
                              witness=failures[0] if failures else None))

    failures = []
    for p, d in enumerate(embedded):
        for i in range(3 * n):
            image = d.image_of_basis(i)
            allowed = e.block(1) if i < n else (e.block(3) if i >= 2 * n else ())
            if any(c for r, c in enumerate(image) if r not in allowed):
                failures.append({"pair_basis": p + 1, "basis": i + 1})
                break
    checks.append(CheckResult(name="embedding: l_u preserves At and sends At^2 + At^3 into At^3",
                              passed=not failures, detail=f"{len(embedded)} basis pairs",
                              witness=failures[0] if failures else None))

    basis = pairs.pairs()[:homomorphism_limit]
    failures = []
    for p, q in combinations(range(len(basis)), 2):
        outer = map_bracket(embedded[p], embedded[q])
        inner = map_bracket(basis[p].f, basis[q].f)
        if any(outer.image_of_basis(i)[:n] != inner.image_of_basis(i) for i in range(n)):
            failures.append({"left": p + 1, "right": q + 1})
    checks.append(CheckResult(name="embedding: l_u respects brackets on the At block",
                              passed=not failures,
                              detail=f"first {len(basis)} of {pairs.dim} basis pairs",
                              witness=failures[0] if failures else None,
                              sampled=len(basis) < pairs.dim))

    size = 9 * n * n
    image_space = span([d.to_coords() for d in embedded], size)
    checks.append(CheckResult(name="embedding: l_u is injective on QDer",
                              passed=image_space.dim == sp.qder.dim,
                              detail=f"dim l_u(QDer) = {image_space.dim}, dim QDer = {sp.qder.dim}"))

    shift = LinearMap.identity(n) - LinearMap(e.derived_projection)
    failures = []
    for p, pair in enumerate(pairs.pairs()):
        moved = QDerPair(pair.f, pair.fprime + shift)
        if embed_qder(e, moved, pairs) != embedded[p]:
            failures.append({"pair_basis": p + 1})
    checks.append(CheckResult(name="embedding: l_u(f) does not depend on f' off A¹",
                              passed=not failures, detail=f"{pairs.dim} basis pairs",
                              witness=failures[0] if failures else None))
    return checks


def lie_center(space: MapSpace) -> Subspace:
    """Maps in the space commuting with every map of the space."""
    maps = space.maps()
    m = len(maps)
    size = space.n * space.n
    brackets = [[map_bracket(f, g).to_coords() for g in maps] for f in maps]
    rows = []
    for k in range(m):
        for c in range(size):
            row = {p: brackets[p][k][c] for p in range(m) if brackets[p][k][c]}
            if row:
                rows.append(row)
    weights = nullspace_of_rows(rows, m)
    vectors = []
    for w in weights.vectors:
        acc = [Fraction(0)] * size
        for p, c in enumerate(w):
            if c:
                for idx, x in enumerate(maps[p].to_coords()):
                    acc[idx] += c * x
        vectors.append(tuple(acc))
    return span(vectors, size)


def semidirect_checks(e: ExtendedAlgebra, sp: AlgebraSpaces, lie_center_limit: int = 64) -> tuple[list[CheckResult], dict]:
    """Der(Ã) = l_u(QDer(A)) ⊕ ZDer(Ã) for a centerless base; returns checks and dimensions."""
    if sp.center.dim != 0:
        raise CenterNotZero(f"{e.base.name} has a center of dimension {sp.center.dim}")
    n = e.n
    size = 9 * n * n
    der_ext = der(e.algebra)
    zder_ext = zder(e.algebra)
    image = span([d.to_coords() for d in _embedded(e, sp.qder_pairs)], size)
    both = subspace_intersect(image, zder_ext.space)
    total = subspace_sum(image, zder_ext.space)
    checks = [
        CheckResult(name="extension: l_u(QDer) in Der(Ã)", passed=subspace_contains(der_ext.space, image),
                    detail=f"dim {image.dim} in dim {der_ext.dim}"),
        CheckResult(name="extension: l_u(QDer) ∩ ZDer(Ã) = 0", passed=both.dim == 0,
                    detail=f"intersection dim {both.dim}"),
        CheckResult(name="extension: Der(Ã) = l_u(QDer) + ZDer(Ã)", passed=total == der_ext.space,
                    detail=f"{image.dim} + {zder_ext.dim} against {der_ext.dim}"),
    ]

    failures = []
    der_maps = der_ext.maps()
    for p, d in enumerate(der_maps):
        for q, z in enumerate(zder_ext.maps()):
            if not zder_ext.contains(map_bracket(d, z)):
                failures.append({"der_basis": p + 1, "zder_basis": q + 1})
    checks.append(CheckResult(name="extension: ZDer(Ã) is an ideal of Der(Ã)", passed=not failures,
                              detail=f"{der_ext.dim * zder_ext.dim} brackets of basis maps",
                              witness=failures[0] if failures else None))

    z_ext = center(e.algebra)
    upper = subspace_sum(coordinate_block(3 * n, e.block(2)), coordinate_block(3 * n, e.block(3)))
    checks.append(CheckResult(name="extension: Z(Ã) = At^2 + At^3", passed=z_ext == upper,
                              detail=f"dim Z(Ã) = {z_ext.dim}"))
    failures = [{"der_basis": p + 1} for p, d in enumerate(der_maps)
                if not all(z_ext.contains_vector(d.apply(v)) for v in z_ext.vectors)]
    checks.append(CheckResult(name="extension: derivations preserve Z(Ã)", passed=not failures,
                              detail=f"{der_ext.dim} basis derivations",
                              witness=failures[0] if failures else None))

    dims = {"der_extension": der_ext.dim, "qder_image": image.dim, "zder_extension": zder_ext.dim}
    if der_ext.dim <= lie_center_limit:
        dims["lie_center_of_der_extension"] = lie_center(der_ext).dim
    return checks, dims
