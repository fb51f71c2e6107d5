import pytest

from tests.conftest import CATALOG
from trilie.algebras.algebra_models import LinearMap
from trilie.algebras.algebra_ops import center
from trilie.extension.extension_models import CenterNotZero, InvalidPair
from trilie.extension.extension_ops import (
    embed_qder, embedding_checks, extend, semidirect_checks, zder_center_of_extension,
)
from trilie.maps.map_checks import is_derivation
from trilie.maps.map_models import QDerPair
from trilie.maps.map_spaces import qder_companion


def failed(checks):
    return [c.name for c in checks if not c.passed]


@pytest.fixture(scope="module")
def a3_extension(a3):
    return extend(a3)


def test_extension_shape(a3_extension):
    x = a3_extension
    assert x.algebra.dim == 9
    assert x.derived.dim == 1
    assert x.u_complement.dim == 2
    assert list(x.block(3)) == [6, 7, 8]
    assert x.algebra.basis_bracket(0, 1, 2) == tuple([0] * 6 + [1, 0, 0])
    assert center(x.algebra).dim == 6


def test_a3_identity_embeds_as_a_derivation(a3, a3_extension):
    pair = qder_companion(a3, LinearMap.identity(3))
    d = embed_qder(a3_extension, pair)
    assert is_derivation(a3_extension.algebra, d) is None
    assert d.image_of_basis(0)[:3] == (1, 0, 0)
    assert d.image_of_basis(6)[6:] == (3, 0, 0)
    assert not any(d.image_of_basis(3))


def test_embedding_rejects_a_bad_pair(a3_extension):
    with pytest.raises(InvalidPair):
        embed_qder(a3_extension, QDerPair(LinearMap.identity(3), LinearMap.zero(3)))


@pytest.mark.parametrize("name", CATALOG)
def test_embedding_checks_hold(catalog_spaces, name):
    sp = catalog_spaces[name]
    if sp.algebra.dim > 4:
        pytest.skip("extension too large for a unit test")
    assert failed(embedding_checks(extend(sp.algebra), sp)) == []


def test_der_of_the_a3_extension_splits(a3_spaces, a3_extension):
    checks, dims = semidirect_checks(a3_extension, a3_spaces)
    assert failed(checks) == []
    assert dims["der_extension"] == 57
    assert dims["qder_image"] == 9
    assert dims["zder_extension"] == 48
    assert zder_center_of_extension(a3_extension).dim == 48


def test_splitting_needs_a_centerless_base(b4_spaces):
    with pytest.raises(CenterNotZero):
        semidirect_checks(extend(b4_spaces.algebra), b4_spaces)
