from fractions import Fraction

import pytest

from tests.conftest import e, units, vec
from trilie.algebras.algebra_catalog import load_catalog
from trilie.algebras.algebra_models import LinearMap
from trilie.algebras.algebra_ops import ad_map, coordinate_block
from trilie.exceptions import InvalidTorusError
from trilie.linalg.linalg_ops import span, subspace_contains
from trilie.maps.map_spaces import AlgebraSpaces
from trilie.weights.weight_checks import centralizer_of_torus, check_sum_decomposable, structure_checks
from trilie.weights.weight_models import (
    DependentGenerators, NonDiagonalizable, NotAbelian, Torus, WeightFunctional, ZeroWeightSpaceExceedsTorus,
)
from trilie.weights.weight_ops import (
    fitting_one_part, fitting_zero_is_kernel, hom_action, hom_operator, maps_of, require_valid_torus,
    restricted_hom_operators, root_decomposition, torus_coordinates, validate_torus, weight_decomposition_of,
)


def failed(checks):
    return [c.name for c in checks if not c.passed]


def b4_torus():
    return Torus((e(4, 2), e(4, 3), e(4, 4)))


@pytest.mark.parametrize("name, generators, error", [
    ("B4", [2, 3], ZeroWeightSpaceExceedsTorus),
    ("A3", [1, 2], NonDiagonalizable),
    ("A3", [1, 2, 3], NotAbelian),
    ("A3", [2, 2], DependentGenerators),
])
def test_invalid_tori(name, generators, error):
    a = load_catalog(name).algebra
    torus = Torus(tuple(e(a.dim, k) for k in generators))
    assert failed(validate_torus(a, torus))
    with pytest.raises(error):
        require_valid_torus(a, torus)


def test_invalid_torus_errors_share_an_exit_code():
    assert issubclass(NonDiagonalizable, InvalidTorusError)
    assert NotAbelian("x").exit_code == 4


def test_a3_root_decomposition(a3, a3_torus):
    assert failed(validate_torus(a3, a3_torus)) == []
    roots = root_decomposition(a3, a3_torus)
    assert roots.dimensions() == {"(0)": 2, "(1)": 1}
    assert roots.get(WeightFunctional((Fraction(1),))) == span([e(3, 1)], 3)
    assert roots.zero_part == span([e(3, 2), e(3, 3)], 3)
    assert fitting_one_part(roots) == span([e(3, 1)], 3)


def test_weight_functional_is_alternating():
    w = WeightFunctional((Fraction(2),))
    assert w.evaluate((1, 0), (0, 1)) == 2
    assert w.evaluate((0, 1), (1, 0)) == -2
    assert (w + -w).is_zero()
    assert (-w).label() == "(-2)"


def test_torus_coordinates(a3, a3_torus):
    assert torus_coordinates(a3, a3_torus, vec(0, 2, 5)) == (2, 5)
    assert torus_coordinates(a3, a3_torus, e(3, 1)) is None


def test_hom_action(a3):
    f = LinearMap.elementary(1, 0, 3)
    assert hom_action(a3, e(3, 2), e(3, 3), f) == f
    assert hom_action(a3, e(3, 2), e(3, 3), LinearMap.identity(3)).is_zero()
    d = ad_map(a3, e(3, 2), e(3, 3))
    assert hom_action(a3, e(3, 2), e(3, 3), d).is_zero()
    assert hom_operator(a3, e(3, 2), e(3, 3)).apply(f.to_coords()) == f.to_coords()


def test_a3_qder_weights(a3, a3_spaces, a3_torus):
    qd = weight_decomposition_of(a3_spaces.qder, a3, a3_torus)
    assert qd.dimensions() == {"(-1)": 2, "(0)": 5, "(1)": 2}
    checks, result = structure_checks(a3, a3_torus, a3_spaces)
    assert failed(checks) == []
    assert result["qder_weights"] == {"(-1)": 2, "(0)": 5, "(1)": 2}
    assert result["qcentroid_weights"] == {"(0)": 1}
    assert result["qder_weight_in_der"]["(1)"] == {"in_der": True}
    assert result["qder_weight_in_der"]["(0)"] == {"in_der": False}
    assert result["qder_weight_in_der"]["(-1)"] == {"in_der": False}
    assert result["der_in_qder_0"] is False


def test_reversing_the_generators_flips_the_labels(a3, a3_spaces):
    _, result = structure_checks(a3, Torus((e(3, 3), e(3, 2))), a3_spaces)
    assert result["roots"] == {"(-1)": 1, "(0)": 2}
    assert result["qder_weight_in_der"]["(-1)"] == {"in_der": True}
    assert result["qder_weight_in_der"]["(1)"] == {"in_der": False}


def test_a3_qder_weight_spaces_match_the_displayed_matrices(a3, a3_spaces):
    qd = weight_decomposition_of(a3_spaces.qder, a3, Torus((e(3, 3), e(3, 2))))
    assert qd.zero_part == units(3, (1, 1), (2, 2), (2, 3), (3, 2), (3, 3))
    assert qd.get(WeightFunctional((Fraction(-1),))) == units(3, (2, 1), (3, 1))
    assert qd.get(WeightFunctional((Fraction(1),))) == units(3, (1, 2), (1, 3))
    assert subspace_contains(a3_spaces.der.space, qd.get(WeightFunctional((Fraction(-1),))))
    assert not subspace_contains(a3_spaces.der.space, qd.get(WeightFunctional((Fraction(1),))))
    assert not subspace_contains(a3_spaces.der.space, qd.zero_part)
    assert not subspace_contains(qd.zero_part, a3_spaces.der.space)


def test_a3_zero_weight_quasicentroid_is_the_centroid(a3, a3_spaces, a3_torus):
    qg = weight_decomposition_of(a3_spaces.quasicentroid, a3, a3_torus)
    assert qg.zero_part == a3_spaces.centroid.space


def test_b4_quasicentroid_weights(b4, b4_spaces):
    qg = weight_decomposition_of(b4_spaces.quasicentroid, b4, b4_torus())
    assert qg.dimensions() == {"(-1, 0, 0)": 1, "(0, 0, 0)": 4}
    [moved] = maps_of(qg, WeightFunctional((Fraction(-1), Fraction(0), Fraction(0))), 4)
    assert moved.image_of_basis(0)[3] != 0
    assert not any(moved.image_of_basis(1))


@pytest.mark.parametrize("name", ["A3", "B4", "A3+A3", "A3+abelian(1)", "abelian(2)"])
def test_structure_checks_hold_on_the_catalog(name):
    loaded = load_catalog(name)
    checks, result = structure_checks(loaded.algebra, Torus(loaded.torus), AlgebraSpaces(loaded.algebra))
    assert failed(checks) == []
    assert result["qder_weights"]


def test_opposite_roots_keep_the_zero_weight_quasicentroid(b4, b4_spaces):
    checks, _ = structure_checks(b4, b4_torus(), b4_spaces)
    [closure] = [c for c in checks if c.name == "quasicentroid: (A_α, A_-α)QΓ_0 in QΓ_0"]
    assert closure.passed
    roots = root_decomposition(b4, b4_torus())
    qg = weight_decomposition_of(b4_spaces.quasicentroid, b4, b4_torus())
    for alpha, xs in roots.entries.items():
        for x in xs.vectors:
            for y in roots.get(-alpha).vectors:
                for f in maps_of(qg, qg.zero_weight, 4):
                    assert qg.zero_part.contains_vector(hom_action(b4, x, y, f).to_coords())


def test_a3_plus_a3_roots():
    loaded = load_catalog("A3+A3")
    roots = root_decomposition(loaded.algebra, Torus(loaded.torus))
    assert roots.dimensions()["(1, 0, 0, 0, 0, 0)"] == 1
    assert roots.dimensions()["(0, 0, 0, 0, 0, 1)"] == 1


def test_fitting_null_part_is_the_kernel(a3, a3_spaces, a3_torus):
    for op in restricted_hom_operators(a3_spaces.qder, a3, a3_torus):
        assert fitting_zero_is_kernel(op)


def test_restricted_operators_need_a_map_space(a3, a3_spaces, a3_torus):
    with pytest.raises(ValueError):
        restricted_hom_operators(a3_spaces.qder_pairs, a3, a3_torus)


def test_centralizer_of_the_torus(a3, a3_torus, b4):
    assert centralizer_of_torus(a3, a3_torus).dim == 0
    assert centralizer_of_torus(b4, b4_torus()) == span([e(4, 4)], 4)


@pytest.mark.parametrize("name, expected", [("A3+A3", [1, 1]), ("A3+abelian(1)", [1, 1])])
def test_quasicentroid_of_a_direct_sum(name, expected):
    loaded = load_catalog(name)
    a = loaded.algebra
    blocks = [coordinate_block(a.dim, b) for b in loaded.blocks]
    checks, result = check_sum_decomposable(a, blocks)
    assert failed(checks) == []
    assert result["block_qcentroid_dims"] == expected
    assert result["qcentroid"] == {"A3+A3": 2, "A3+abelian(1)": 5}[name]
    assert result["cross_maps"] == {"A3+A3": 0, "A3+abelian(1)": 3}[name]


def test_sum_decomposable_in_a_non_coordinate_basis(a3_abelian1):
    tilted = span([(1, 0, 0, 0), (0, 1, 0, 1), (0, 0, 1, 0)], 4)
    checks, result = check_sum_decomposable(a3_abelian1, [tilted, span([e(4, 4)], 4)])
    assert failed(checks) == []
    assert result["qcentroid"] == 5
