from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trilie.linalg.linalg_models import AmbientMismatch, Matrix, Subspace, unit_vector
from trilie.linalg.linalg_ops import (
    NonRationalSpectrum, NotCommuting, NotDiagonalizable, SpaceNotInvariant, independent, inverse, nullspace,
    rank, rational_eigenvalues, restrict, rref, simultaneous_eigenspaces, solve_affine, span, subspace_complement,
    subspace_contains, subspace_intersect, subspace_sum,
)


@st.composite
def matrices(draw, max_rows=4, max_cols=4):
    nrows = draw(st.integers(1, max_rows))
    ncols = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(st.integers(-3, 3), min_size=ncols, max_size=ncols),
                         min_size=nrows, max_size=nrows))
    return Matrix.from_rows(rows)


@st.composite
def subspace_pairs(draw, n=4):
    def vectors():
        return st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), max_size=3)
    return span(draw(vectors()), n), span(draw(vectors()), n)


def test_rref_of_known_matrix():
    m = Matrix.from_rows([[2, 4, 6], [1, 2, 4]])
    reduced, pivots = rref(m)
    assert pivots == (0, 2)
    assert reduced == Matrix.from_rows([[1, 2, 0], [0, 0, 1]])


def test_nullspace_is_annihilated():
    m = Matrix.from_rows([[1, 2], [2, 4]])
    kernel = nullspace(m)
    assert kernel.dim == 1
    assert not any(m.apply(kernel.vectors[0]))


def test_coordinate_planes_meet_in_a_line():
    xy = span([unit_vector(3, 0), unit_vector(3, 1)], 3)
    yz = span([unit_vector(3, 1), unit_vector(3, 2)], 3)
    assert subspace_intersect(xy, yz) == span([unit_vector(3, 1)], 3)
    assert subspace_sum(xy, yz) == Subspace.full(3)
    assert subspace_contains(xy, span([unit_vector(3, 0)], 3))
    assert not subspace_contains(xy, yz)


def test_complement_is_independent():
    u = span([(1, 1, 0)], 3)
    c = subspace_complement(u)
    assert c.dim == 2
    assert independent([u, c], 3)


def test_mismatched_ambients_are_rejected():
    with pytest.raises(AmbientMismatch):
        subspace_sum(Subspace.full(2), Subspace.full(3))


def test_solve_affine():
    m = Matrix.from_rows([[1, 1], [1, -1]])
    x = solve_affine(m, (Fraction(3), Fraction(1)))
    assert x == (Fraction(2), Fraction(1))
    singular = Matrix.from_rows([[1, 1], [2, 2]])
    assert solve_affine(singular, (Fraction(1), Fraction(3))) is None


def test_inverse():
    m = Matrix.from_rows([[2, 1], [1, 1]])
    assert m @ inverse(m) == Matrix.identity(2)


def test_rational_eigenvalues_with_multiplicity():
    assert rational_eigenvalues(Matrix.diagonal([1, 2, 2])) == {Fraction(1): 1, Fraction(2): 2}


def test_rotation_has_no_rational_spectrum():
    with pytest.raises(NonRationalSpectrum):
        rational_eigenvalues(Matrix.from_rows([[0, -1], [1, 0]]))


def test_jordan_block_is_not_diagonalizable():
    with pytest.raises(NotDiagonalizable):
        simultaneous_eigenspaces([Matrix.from_rows([[1, 1], [0, 1]])], 2)


def test_non_commuting_family():
    a = Matrix.from_rows([[1, 0], [0, 0]])
    b = Matrix.from_rows([[0, 1], [0, 0]])
    with pytest.raises(NotCommuting):
        simultaneous_eigenspaces([a, b], 2)


def test_joint_eigenspaces_of_diagonal_family():
    a = Matrix.diagonal([1, 1, 0])
    b = Matrix.diagonal([0, 1, 1])
    pieces = simultaneous_eigenspaces([a, b], 3)
    assert [values for values, _ in pieces] == [
        (Fraction(0), Fraction(1)), (Fraction(1), Fraction(0)), (Fraction(1), Fraction(1))]
    assert all(space.dim == 1 for _, space in pieces)


def test_empty_family_has_one_eigenspace():
    assert simultaneous_eigenspaces([], 3) == [((), Subspace.full(3))]
    with pytest.raises(AmbientMismatch):
        simultaneous_eigenspaces([Matrix.identity(2)], 3)


def test_restrict_rejects_a_non_invariant_space():
    op = Matrix.from_rows([[0, 0], [1, 0]])
    with pytest.raises(SpaceNotInvariant):
        restrict(op, span([unit_vector(2, 0)], 2))


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_rank_plus_nullity(m):
    assert rank(m) + nullspace(m).dim == m.ncols


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_rref_is_idempotent(m):
    reduced, pivots = rref(m)
    assert rref(reduced) == (reduced, pivots)


@settings(max_examples=40, deadline=None)
@given(subspace_pairs())
def test_dimension_of_sum_and_intersection(pair):
    u, v = pair
    assert subspace_sum(u, v).dim + subspace_intersect(u, v).dim == u.dim + v.dim
    assert subspace_contains(u, subspace_intersect(u, v))
    assert subspace_contains(subspace_sum(u, v), v)


@settings(max_examples=30, deadline=None)
@given(subspace_pairs(), subspace_pairs())
def test_modular_law(first, second):
    u, v = first
    w = subspace_sum(u, second[0])
    assert subspace_intersect(subspace_sum(u, v), w) == subspace_sum(u, subspace_intersect(v, w))
