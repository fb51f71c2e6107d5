import pytest

from tests.conftest import CATALOG
from trilie.algebras.algebra_models import LinearMap
from trilie.maps.map_checks import (
    closure_checks, decomposition_checks, direct_sum_checks, embed_block_map, inclusion_checks, module_action,
    qcentroid_module_checks,
)


def failed(checks):
    return [c.name for c in checks if not c.passed]


@pytest.mark.parametrize("name", CATALOG)
def test_closure_and_inclusions_hold(catalog_spaces, name):
    sp = catalog_spaces[name]
    assert failed(closure_checks(sp)) == []
    assert failed(inclusion_checks(sp)) == []


@pytest.mark.parametrize("name", CATALOG)
def test_gder_decomposes(catalog_spaces, name):
    assert failed(decomposition_checks(catalog_spaces[name])) == []


@pytest.mark.parametrize("name", CATALOG)
def test_quasicentroid_identities(catalog_spaces, name):
    assert failed(qcentroid_module_checks(catalog_spaces[name])) == []


def test_direct_sum_splits_blockwise(catalog_spaces):
    checks = direct_sum_checks(catalog_spaces["A3+A3"], [[0, 1, 2], [3, 4, 5]])
    assert len(checks) == 3
    assert failed(checks) == []


def test_direct_sum_checks_need_a_centerless_algebra(catalog_spaces):
    assert direct_sum_checks(catalog_spaces["A3+abelian(1)"], [[0, 1, 2], [3]]) == []


def test_zero_center_adds_the_abelian_check(catalog_spaces):
    names = [c.name for c in decomposition_checks(catalog_spaces["A3"])]
    assert "abelian: [QCentroid, QCentroid] = 0 when Z(A) = 0" in names
    names = [c.name for c in decomposition_checks(catalog_spaces["B4"])]
    assert "abelian: [QCentroid, QCentroid] = 0 when Z(A) = 0" not in names


def test_embed_block_map():
    f = LinearMap.elementary(0, 1, 2)
    g = embed_block_map(f, [2, 3], 4)
    assert g == LinearMap.elementary(2, 3, 4)


def test_module_action_of_scalars_vanishes(a3):
    assert module_action(a3, 0, 1, LinearMap.identity(3)).is_zero()
