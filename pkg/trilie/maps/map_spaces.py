import logging
from collections import defaultdict
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product

from ..algebras.algebra_models import Algebra, LinearMap
from ..algebras.algebra_ops import bracket, center, derived_algebra
from ..linalg.linalg_models import Subspace, unit_vector
from ..linalg.linalg_ops import annihilator, nullspace_of_rows, solve_rows, span
from .map_models import (
    Ambient, GenDerQuadruple, MapKind, MapSpace, NotAGeneralizedDerivation, NotInDelta, QDerPair,
)

log = logging.getLogger(__name__)


class _Equation:
    """A vector equation in F^n whose terms are linear in unknown map entries.

    The unknown map stored at ``offset`` has entry offset + i*n + l equal to
    the e_l coefficient of its value on e_i.
    """

    def __init__(self, a: Algebra):
        self.a = a
        self.rows = [defaultdict(Fraction) for _ in range(a.dim)]

    def slot(self, offset: int, triple: tuple[int, int, int], position: int, sign: int = 1):
        """Add sign * [.., f(e_t), ..] with f applied in the given position."""
        n = self.a.dim
        source = triple[position]
        for l in range(n):
            args = list(triple)
            args[position] = l
            value = self.a.basis_bracket(*args)
            for r, c in enumerate(value):
                if c:
                    self.rows[r][offset + source * n + l] += sign * c

    def image(self, offset: int, triple: tuple[int, int, int], sign: int = 1):
        """Add sign * f([e_i, e_j, e_k])."""
        n = self.a.dim
        for m, c in enumerate(self.a.basis_bracket(*triple)):
            if c:
                for l in range(n):
                    self.rows[l][offset + m * n + l] += sign * c

    def emit(self) -> list[dict[int, Fraction]]:
        return [{k: v for k, v in row.items() if v} for row in self.rows if any(row.values())]


def _ordered_triples(n: int):
    return product(range(n), repeat=3)


def _increasing_triples(n: int):
    return combinations(range(n), 3)


def _solve(a: Algebra, kind: MapKind, ambient: Ambient, rows: list, factor: int) -> MapSpace:
    n = a.dim
    space = nullspace_of_rows(rows, factor * n * n)
    log.debug("%s(%s): %d equations, dim %d", kind.value, a.name, len(rows), space.dim)
    return MapSpace(kind, ambient, n, space)


def der(a: Algebra) -> MapSpace:
    rows = []
    for t in _increasing_triples(a.dim):
        eq = _Equation(a)
        for p in range(3):
            eq.slot(0, t, p)
        eq.image(0, t, -1)
        rows.extend(eq.emit())
    return _solve(a, MapKind.DER, Ambient.HOM, rows, 1)


def inner_der(a: Algebra) -> MapSpace:
    n = a.dim
    vectors = [LinearMap(a.ad_basis(i, j)).to_coords() for i, j in combinations(range(n), 2)]
    return MapSpace(MapKind.AD, Ambient.HOM, n, span(vectors, n * n))


def _images_in(space: Subspace, n: int) -> list[dict[int, Fraction]]:
    """Rows forcing f(e_i) into the given subspace for every i."""
    rows = []
    for form in annihilator(space).vectors:
        for i in range(n):
            row = {i * n + l: c for l, c in enumerate(form) if c}
            if row:
                rows.append(row)
    return rows


def _vanishing_on(space: Subspace, n: int) -> list[dict[int, Fraction]]:
    """Rows forcing f to vanish on the given subspace."""
    rows = []
    for d in space.vectors:
        for l in range(n):
            row = {m * n + l: c for m, c in enumerate(d) if c}
            if row:
                rows.append(row)
    return rows


def zder(a: Algebra) -> MapSpace:
    """Maps with image in the center that vanish on the derived algebra."""
    n = a.dim
    rows = _images_in(center(a), n) + _vanishing_on(derived_algebra(a), n)
    return _solve(a, MapKind.ZDER, Ambient.HOM, rows, 1)


def _slot_agreement_rows(a: Algebra, with_image: bool) -> list:
    rows = []
    for t in _ordered_triples(a.dim):
        for p in range(2):
            eq = _Equation(a)
            eq.slot(0, t, p)
            eq.slot(0, t, p + 1, -1)
            rows.extend(eq.emit())
        if with_image:
            eq = _Equation(a)
            eq.slot(0, t, 2)
            eq.image(0, t, -1)
            rows.extend(eq.emit())
    return rows


def centroid(a: Algebra) -> MapSpace:
    return _solve(a, MapKind.CENTROID, Ambient.HOM, _slot_agreement_rows(a, True), 1)


def quasicentroid(a: Algebra) -> MapSpace:
    return _solve(a, MapKind.QCENTROID, Ambient.HOM, _slot_agreement_rows(a, False), 1)


def qder_pairs(a: Algebra) -> MapSpace:
    """Pairs (f, f') with [f x, y, z] + [x, f y, z] + [x, y, f z] = f'([x, y, z])."""
    size = a.dim * a.dim
    rows = []
    for t in _increasing_triples(a.dim):
        eq = _Equation(a)
        for p in range(3):
            eq.slot(0, t, p)
        eq.image(size, t, -1)
        rows.extend(eq.emit())
    return _solve(a, MapKind.QDER_PAIRS, Ambient.PAIRS, rows, 2)


def delta_space(a: Algebra) -> MapSpace:
    """Quadruples (f1, f2, f3, f') of the generalized derivation identity, on every ordered triple."""
    size = a.dim * a.dim
    rows = []
    for t in _ordered_triples(a.dim):
        eq = _Equation(a)
        for p in range(3):
            eq.slot(p * size, t, p)
        eq.image(3 * size, t, -1)
        rows.extend(eq.emit())
    return _solve(a, MapKind.DELTA, Ambient.QUADRUPLES, rows, 4)


def _project_first(source: MapSpace, kind: MapKind) -> MapSpace:
    size = source.n * source.n
    vectors = [v[:size] for v in source.space.vectors]
    return MapSpace(kind, Ambient.HOM, source.n, span(vectors, size))


def qder(a: Algebra, pairs: MapSpace | None = None) -> MapSpace:
    return _project_first(pairs or qder_pairs(a), MapKind.QDER)


def gder(a: Algebra, delta: MapSpace | None = None) -> MapSpace:
    return _project_first(delta or delta_space(a), MapKind.GDER)


def complete_to_quadruple(a: Algebra, g: LinearMap) -> GenDerQuadruple:
    """Companions for g ∈ GDer(a), solving for (f', f2, f3) with free entries set to zero."""
    n = a.dim
    size = n * n
    rows, rhs = [], []
    for t in _ordered_triples(n):
        eq = _Equation(a)
        eq.image(0, t, -1)
        eq.slot(size, t, 1)
        eq.slot(2 * size, t, 2)
        i, j, k = t
        known = bracket(a, g.image_of_basis(i), unit_vector(n, j), unit_vector(n, k))
        for r in range(n):
            row = {c: v for c, v in eq.rows[r].items() if v}
            if row or known[r]:
                rows.append(row)
                rhs.append(-known[r])
    solution = solve_rows(rows, rhs, 3 * size) if rows else (Fraction(0),) * (3 * size)
    if solution is None:
        raise NotAGeneralizedDerivation(f"map is not a generalized derivation of {a.name}")
    fprime, f2, f3 = (LinearMap.from_coords(solution[p * size:(p + 1) * size], n) for p in range(3))
    return GenDerQuadruple(g, f2, f3, fprime)


def qder_companion(a: Algebra, f: LinearMap) -> QDerPair | None:
    """A pair (f, f') with free entries of f' set to zero, or None when f ∉ QDer(a)."""
    n = a.dim
    e = [unit_vector(n, i) for i in range(n)]
    rows, rhs = [], []
    for t in _increasing_triples(n):
        eq = _Equation(a)
        eq.image(0, t, 1)
        i, j, k = t
        known = [sum(parts) for parts in zip(bracket(a, f.apply(e[i]), e[j], e[k]),
                                              bracket(a, e[i], f.apply(e[j]), e[k]),
                                              bracket(a, e[i], e[j], f.apply(e[k])))]
        for r in range(n):
            row = {c: v for c, v in eq.rows[r].items() if v}
            if row or known[r]:
                rows.append(row)
                rhs.append(known[r])
    solution = solve_rows(rows, rhs, n * n) if rows else (Fraction(0),) * (n * n)
    if solution is None:
        return None
    return QDerPair(f, LinearMap.from_coords(solution, n))


def map_bracket(f: LinearMap, g: LinearMap) -> LinearMap:
    """[f, g] = g∘f − f∘g."""
    return g.compose(f) - f.compose(g)


def split_gder(a: Algebra, q: GenDerQuadruple, delta: MapSpace | None = None) -> tuple[QDerPair, tuple[LinearMap, LinearMap, LinearMap]]:
    """Split a quadruple into a quasiderivation pair and three quasicentroid maps.

    With (g, g', g'', g''') the parts are ((g+g'+g'')/3, g''') and
    (2g−g'−g'')/3, (2g'−g−g'')/3, (2g''−g−g')/3, so the pair's map plus the
    first part gives back g.

    Raises NotInDelta unless q lies in Δ. Membership of the results in QDer
    pairs and QΓ follows from that and is not recomputed here; the
    decomposition checks in map_checks verify it on every basis quadruple.
    """
    delta = delta or delta_space(a)
    if not delta.contains_quadruple(q):
        raise NotInDelta(f"quadruple does not satisfy the generalized derivation identity on {a.name}")
    third = Fraction(1, 3)
    g, g1, g2 = q.f1, q.f2, q.f3
    mean = (g + g1 + g2).scale(third)
    parts = (
        (g.scale(2) - g1 - g2).scale(third),
        (g1.scale(2) - g - g2).scale(third),
        (g2.scale(2) - g - g1).scale(third),
    )
    return QDerPair(mean, q.fprime), parts


class AlgebraSpaces:
    """Every derivation-type space of one algebra, computed on first use."""

    def __init__(self, a: Algebra):
        self.algebra = a

    @cached_property
    def center(self) -> Subspace:
        return center(self.algebra)

    @cached_property
    def derived(self) -> Subspace:
        return derived_algebra(self.algebra)

    @cached_property
    def der(self) -> MapSpace:
        return der(self.algebra)

    @cached_property
    def inner_der(self) -> MapSpace:
        return inner_der(self.algebra)

    @cached_property
    def zder(self) -> MapSpace:
        return zder(self.algebra)

    @cached_property
    def centroid(self) -> MapSpace:
        return centroid(self.algebra)

    @cached_property
    def quasicentroid(self) -> MapSpace:
        return quasicentroid(self.algebra)

    @cached_property
    def qder_pairs(self) -> MapSpace:
        return qder_pairs(self.algebra)

    @cached_property
    def delta(self) -> MapSpace:
        return delta_space(self.algebra)

    @cached_property
    def qder(self) -> MapSpace:
        return qder(self.algebra, self.qder_pairs)

    @cached_property
    def gder(self) -> MapSpace:
        return gder(self.algebra, self.delta)

    def by_name(self, name: str) -> MapSpace:
        return getattr(self, {"ad": "inner_der", "qcentroid": "quasicentroid"}.get(name, name))
