import numpy as np
import pytest

from kenstat import catalog


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(scope='session')
def h3():
    return catalog.hyperbolic_kenmotsu(1, 0.0)


@pytest.fixture(scope='session')
def h5():
    return catalog.hyperbolic_kenmotsu(2, 0.0)


@pytest.fixture(scope='session')
def example():
    return catalog.example_3_4(1.0, 1.0)


@pytest.fixture(scope='session')
def euclidean3():
    return catalog.euclidean(3)


def orthonormal_structure(s):
    """g = I, φ = standard J on the first 2s coordinates, ξ = last basis vector"""
    n = 2 * s + 1
    phi = np.zeros((n, n))
    phi[:-1, :-1] = catalog.standard_j(s)
    xi = np.zeros(n)
    xi[-1] = 1.0
    return np.eye(n), phi, xi
