import numpy as np
import pytest
from numpy.testing import assert_allclose

from kenstat import catalog
from kenstat.curvature import (
    connection_curvature,
    curvature_sample,
    jacobi_operator,
    jacobi_parallelism_residual,
    k_commutator,
    orthonormal_plane,
    ricci_curvature,
    sectional_curvature,
    statistical_curvature,
)
from kenstat.exceptions import DegeneratePlaneError


P = np.array([0.2, -0.3, 0.1])


def unit_fiber_vector(alpha):
    return np.array([np.exp(-alpha), 0.0, 0.0])


def test_flat_space_has_no_curvature(euclidean3):
    sample = curvature_sample(euclidean3, [0.1, 0.2, 0.3])
    for selector in ('statistical', 'primal', 'dual', 'levi-civita'):
        assert_allclose(sample.tensor(selector), 0.0, atol=1e-9)


def test_hyperbolic_sectional_curvature(h3):
    E = unit_fiber_vector(P[2])
    xi = h3.xi(P)
    assert sectional_curvature(h3.base, P, E, xi) == pytest.approx(-1.0, abs=1e-5)
    assert sectional_curvature(h3.base, P, [1.0, 2.0, 0.5], [-0.3, 1.0, 2.0]) == pytest.approx(-1.0, abs=1e-5)


def test_hyperbolic_ricci(h3):
    assert ricci_curvature(h3.base, P, unit_fiber_vector(P[2])) == pytest.approx(-2.0, abs=1e-5)
    assert ricci_curvature(h3.base, P, h3.xi(P)) == pytest.approx(-2.0, abs=1e-5)


def test_hyperbolic_jacobi_operator(h3):
    E = unit_fiber_vector(P[2])
    assert_allclose(jacobi_operator(h3.base, P, h3.xi(P), E), -E, atol=1e-5)


def test_round_sphere_sectional_curvature():
    M = catalog.round_sphere_test(2)
    assert sectional_curvature(M, [0.3, -0.4], [1.0, 0.0], [0.0, 1.0]) == pytest.approx(1.0, abs=1e-5)


def test_statistical_curvature_two_ways(example):
    for p in example.base.sample_points(4, seed=2):
        sample = curvature_sample(example.base, p)
        assert sample.dual_path_residual() < 1e-6
        assert sample.antisymmetry_residual() < 1e-6
        assert sample.pairing_residual() < 1e-5


def test_statistical_curvature_returns_cross_check(example):
    E, F, G = np.eye(3)
    value, residual = statistical_curvature(example.base, [1.0, 0.0, 0.0], E, F, G)
    assert value.shape == (3,)
    assert residual < 1e-6


def test_commutator_vanishes_for_reeb_only_tensor():
    k = np.zeros((3, 3, 3))
    k[2, 2, 2] = 0.7
    assert_allclose(k_commutator(k), 0.0)


def test_connection_curvature_rejects_statistical_selector(example):
    E, F, G = np.eye(3)
    with pytest.raises(ValueError):
        connection_curvature(example.base, 'statistical', [1.0, 0.0, 0.0], E, F, G)
    assert connection_curvature(example.base, 'primal', [1.0, 0.0, 0.0], E, F, G).shape == (3,)


def test_sectional_forms_agree(example):
    p = [1.3, 0.2, -0.1]
    sample = curvature_sample(example.base, p)
    E, F = [1.0, 0.5, 0.0], [0.0, 1.0, 1.0]
    statistical = sectional_curvature(example.base, p, E, F, sample=sample)
    averaged = sectional_curvature(example.base, p, E, F, form='averaged', sample=sample)
    assert statistical == pytest.approx(averaged, abs=1e-6)


def test_degenerate_plane():
    with pytest.raises(DegeneratePlaneError):
        orthonormal_plane(np.eye(3), [1.0, 2.0, 3.0], [2.0, 4.0, 6.0])


@pytest.mark.parametrize('name', ['h3', 'example'])
def test_structure_jacobi_operator_is_parallel(name, request):
    M = request.getfixturevalue(name)
    residual = jacobi_parallelism_residual(M.base, M.xi, [1.1, 0.2, 0.1])
    assert residual.projected < 1e-4


@pytest.mark.parametrize('name', ['h3', 'example'])
def test_unrestricted_jacobi_derivative_keeps_reeb_component(name, request):
    M = request.getfixturevalue(name)
    residual = jacobi_parallelism_residual(M.base, M.xi, [0.3, 0.2, 0.1])
    assert residual.full == pytest.approx(1.0, abs=1e-4)


def test_constant_reeb_field_on_euclidean_space(euclidean3):
    residual = jacobi_parallelism_residual(euclidean3, lambda p: np.array([0.0, 0.0, 1.0]), P)
    assert residual.projected < 1e-10
    assert residual.full < 1e-10
