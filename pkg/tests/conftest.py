"""
Shared fixtures. The named arrangements, their posets and their algebras
are built once per session.
"""

import sys
from pathlib import Path

import pytest

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from torarr.cli.catalog import NAMED_MATRICES, covering_matrix
from torarr.cohom import build_rational_presentation, build_unimodular_presentation
from torarr.layers import enumerate_layers


@pytest.fixture(scope="session")
def N():
    return NAMED_MATRICES["N"]


@pytest.fixture(scope="session")
def N_prime():
    return NAMED_MATRICES["Nprime"]


@pytest.fixture(scope="session")
def N_second():
    return NAMED_MATRICES["Nsecond"]


@pytest.fixture(scope="session")
def A():
    return NAMED_MATRICES["A"]


@pytest.fixture(scope="session")
def A71():
    return covering_matrix(7, 1)


@pytest.fixture(scope="session")
def A72():
    return covering_matrix(7, 2)


@pytest.fixture(scope="session")
def poset_N(N):
    return enumerate_layers(N)


@pytest.fixture(scope="session")
def poset_N_prime(N_prime):
    return enumerate_layers(N_prime)


@pytest.fixture(scope="session")
def unimodular_A(A):
    return build_unimodular_presentation(A)


@pytest.fixture(scope="session")
def rational_A(A):
    return build_rational_presentation(A)


@pytest.fixture(scope="session")
def rational_N(N):
    return build_rational_presentation(N)


@pytest.fixture(scope="session")
def rational_N_prime(N_prime):
    return build_rational_presentation(N_prime)
