import pytest

from tests.conftest import CATALOG, e, vec
from trilie.algebras.algebra_catalog import catalog_document, load_catalog
from trilie.algebras.algebra_files import read_document, validated_input
from trilie.algebras.algebra_models import Algebra, AlgebraDocument, BlocksNotValid
from trilie.algebras.algebra_ops import (
    abelian, bracket, center, change_basis, coordinate_block, derived_algebra, direct_sum,
    fundamental_identity_violations, is_ideal, restrict_to_block, validate_blocks,
)
from trilie.exceptions import AlgebraFormatError, InvalidAlgebraError
from trilie.linalg.linalg_models import Matrix
from trilie.linalg.linalg_ops import span

NOT_A_3_LIE_ALGEBRA = """
dim: 4
brackets:
  - {i: 1, j: 2, k: 3, value: ["0", "0", "0", "1"]}
  - {i: 1, j: 2, k: 4, value: ["1", "0", "0", "0"]}
"""


@pytest.mark.parametrize("name", CATALOG)
def test_catalog_algebras_satisfy_the_fundamental_identity(name):
    assert fundamental_identity_violations(load_catalog(name).algebra) == []


def test_a3_bracket_is_skew(a3):
    assert bracket(a3, e(3, 1), e(3, 2), e(3, 3)) == e(3, 1)
    assert bracket(a3, e(3, 2), e(3, 1), e(3, 3)) == vec(-1, 0, 0)
    assert bracket(a3, e(3, 3), e(3, 1), e(3, 2)) == e(3, 1)
    assert a3.basis_bracket(0, 0, 2) == vec(0, 0, 0)


def test_bracket_is_trilinear(a3):
    x = vec(1, 2, 0)
    assert bracket(a3, x, e(3, 2), e(3, 3)) == e(3, 1)
    assert bracket(a3, vec(2, 0, 0), vec(0, 3, 0), vec(1, 1, 1)) == vec(6, 0, 0)


def test_center_and_derived_algebra(a3, b4):
    assert center(a3).dim == 0
    assert center(b4) == span([e(4, 4)], 4)
    assert derived_algebra(a3) == span([e(3, 1)], 3)
    assert is_ideal(a3, derived_algebra(a3))


def test_abelian_center_is_everything():
    assert center(abelian(3)).dim == 3
    assert derived_algebra(abelian(3)).dim == 0


def test_direct_sum_matches_catalog(a3, a3_a3):
    assert direct_sum(a3, a3).constants == a3_a3.constants


def test_restricting_a_block_gives_the_summand(a3, a3_a3):
    assert restrict_to_block(a3_a3, [3, 4, 5]).constants == a3.constants


def test_block_that_is_not_a_subalgebra():
    heisenberg = Algebra.from_brackets(4, {(0, 1, 2): e(4, 4)})
    with pytest.raises(BlocksNotValid):
        restrict_to_block(heisenberg, [0, 1, 2])


def test_change_basis_by_a_swap(a3):
    swap = Matrix.from_columns([e(3, 2), e(3, 1), e(3, 3)], 3)
    swapped = change_basis(a3, swap)
    assert swapped.basis_bracket(0, 1, 2) == vec(0, -1, 0)
    assert fundamental_identity_violations(swapped) == []


def test_validate_blocks(a3, a3_a3):
    validate_blocks(a3_a3, [coordinate_block(6, [0, 1, 2]), coordinate_block(6, [3, 4, 5])])
    with pytest.raises(BlocksNotValid):
        validate_blocks(a3, [coordinate_block(3, [0]), coordinate_block(3, [1, 2])])


def test_fundamental_identity_violation_is_rejected():
    document = read_document(NOT_A_3_LIE_ALGEBRA, "bad.yaml")
    assert fundamental_identity_violations(document.to_algebra())
    with pytest.raises(InvalidAlgebraError):
        validated_input(document, "bad.yaml")


@pytest.mark.parametrize("text", [
    "dim: 3\nbrackets:\n  - {i: 1, j: 2, k: 3, value: ['1', '0', '0']}\n  - {i: 1, j: 2, k: 3, value: ['1', '0', '0']}\n",
    "dim: 3\nbrackets:\n  - {i: 2, j: 1, k: 3, value: ['1', '0', '0']}\n",
    "dim: 3\nbrackets:\n  - {i: 1, j: 2, k: 3, value: [0.5, 0, 0]}\n",
    "dim: 3\nbrackets:\n  - {i: 1, j: 2, k: 3, value: ['1', '0']}\n",
    "dim: 3\nbrackets:\n  - {i: 1, j: 2, k: 4, value: ['1', '0', '0']}\n",
    "dim: 3\nblocks: [[1, 2]]\n",
    "- just a list\n",
    "dim: [\n",
])
def test_malformed_documents(text):
    with pytest.raises(AlgebraFormatError):
        read_document(text, "bad.yaml")


def test_rationals_are_written_as_strings(a3):
    document = AlgebraDocument.from_algebra(a3)
    dumped = document.model_dump(mode="json")
    assert dumped["brackets"][0]["value"] == ["1", "0", "0"]


def test_rational_strings_are_parsed():
    document = read_document("dim: 3\nbrackets:\n  - {i: 1, j: 2, k: 3, value: ['-3/2', 2, '0']}\n", "ok.yaml")
    assert document.to_algebra().basis_bracket(0, 1, 2) == vec("-3/2", 2, 0)


def test_catalog_generates_any_abelian_algebra():
    document = catalog_document("abelian(7)")
    assert document.dim == 7
    assert document.brackets == []


def test_unknown_catalog_name():
    with pytest.raises(AlgebraFormatError):
        catalog_document("G2")


def test_catalog_torus_and_blocks_are_zero_based():
    loaded = load_catalog("A3+A3")
    assert loaded.blocks == ((0, 1, 2), (3, 4, 5))
    assert loaded.torus[0] == e(6, 2)
