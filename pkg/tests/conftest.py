from fractions import Fraction

import pytest

from trilie.algebras.algebra_catalog import load_catalog
from trilie.algebras.algebra_models import LinearMap
from trilie.linalg.linalg_models import unit_vector
from trilie.linalg.linalg_ops import span
from trilie.maps.map_spaces import AlgebraSpaces
from trilie.weights.weight_models import Torus

CATALOG = ["abelian(1)", "abelian(2)", "abelian(3)", "abelian(4)", "A3", "B4", "A3+A3", "A3+abelian(1)"]


def e(n: int, k: int):
    """The 1-based basis vector e_k of F^n."""
    return unit_vector(n, k - 1)


def vec(*values):
    return tuple(Fraction(v) for v in values)


def units(n: int, *entries):
    """Span of the maps sending e_i to e_j, one per 1-based entry (i, j)."""
    return span([LinearMap.elementary(i - 1, j - 1, n).to_coords() for i, j in entries], n * n)


@pytest.fixture(scope="session")
def a3():
    return load_catalog("A3").algebra


@pytest.fixture(scope="session")
def b4():
    return load_catalog("B4").algebra


@pytest.fixture(scope="session")
def a3_a3():
    return load_catalog("A3+A3").algebra


@pytest.fixture(scope="session")
def a3_abelian1():
    return load_catalog("A3+abelian(1)").algebra


@pytest.fixture(scope="session")
def a3_spaces(a3):
    return AlgebraSpaces(a3)


@pytest.fixture(scope="session")
def b4_spaces(b4):
    return AlgebraSpaces(b4)


@pytest.fixture(scope="session")
def catalog_spaces():
    return {name: AlgebraSpaces(load_catalog(name).algebra) for name in CATALOG}


@pytest.fixture(scope="session")
def a3_torus():
    return Torus((e(3, 2), e(3, 3)))
