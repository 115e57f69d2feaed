import pathlib

import pytest

from homalt.constructions import AlbertParams, albert5_base, albert5_twisted
from homalt.core import HomAlgebra, load_algebra
from homalt.linalg import Matrix, identity_matrix, qq

FIXTURES = pathlib.Path(__file__).parent / "fixtures"

# The three parameter triples the example family is exercised at throughout.
TWIST_TRIPLES = ((2, 3, 5), (5, 2, 0), (-1, 4, 7))


def twisted_albert(gamma, delta, epsilon):
    return albert5_twisted(AlbertParams(gamma, delta, epsilon))


def copy_mu(A):
    return [[list(A.mu[i][j]) for j in range(A.dim)] for i in range(A.dim)]


def untwisted_alpha(A):
    """The same product table with alpha forced to the identity."""
    return HomAlgebra(A.dim, A.basis_names, copy_mu(A), identity_matrix(A.dim))


def swapped_alpha_albert():
    """albert5_base with alpha swapping e and u: not multiplicative."""
    base = albert5_base()
    rows = [[qq(0)] * 5 for _ in range(5)]
    rows[0][1] = qq(1)
    rows[1][0] = qq(1)
    for i in (2, 3, 4):
        rows[i][i] = qq(1)
    return HomAlgebra(5, base.basis_names, copy_mu(base), Matrix.from_rows(rows))


@pytest.fixture
def albert():
    return albert5_base()


@pytest.fixture
def a230():
    return twisted_albert(2, 3, 0)


@pytest.fixture(params=TWIST_TRIPLES, ids=lambda t: "g%s_d%s_e%s" % t)
def twisted(request):
    return twisted_albert(*request.param)


@pytest.fixture
def bad_algebra():
    return load_algebra(str(FIXTURES / "non_right_alt_dim3.json"))


@pytest.fixture
def non_multiplicative():
    return swapped_alpha_albert()
