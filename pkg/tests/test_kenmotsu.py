from dataclasses import replace

import numpy as np
import pytest
from numpy.testing import assert_allclose

from kenstat import catalog
from kenstat.kenmotsu import (
    KenmotsuStatisticalManifold,
    SignedResidual,
    build_warped_contact,
    contact_residuals,
    fiber_ricci_check,
    holomorphic_residuals,
    is_ricci_flat,
    kenmotsu_condition_residual,
    kenmotsu_identity_residuals,
    lift_structure_residuals,
    manifold_of,
    model_curvature,
    model_residual,
    model_ricci,
    model_trace_residual,
    reeb_curvature_identities,
    ricci_coefficients,
    ricci_identity_residuals,
    structure_jacobi_frame,
)
from kenstat.statistical import DifferenceTensorField
from tests.conftest import orthonormal_structure


def test_warped_metric_of_half_plane_fiber():
    metric, contact = build_warped_contact(catalog.example_fiber(1.0))
    g = metric([2.0, 0.0, 0.5])
    assert_allclose(g, np.diag([2.0 * np.e, 2.0 * np.e, 1.0]))
    assert_allclose(contact.xi_at([2.0, 0.0, 0.5]), [0.0, 0.0, 1.0])


def test_lifted_difference_tensor(example):
    k = example.base.k([1.0, 0.5, 0.2])
    assert k[0, 0, 0] == -1.0
    assert k[1, 0, 1] == k[1, 1, 0] == k[0, 1, 1] == 1.0
    assert k[2, 2, 2] == 1.0
    assert k[0, 0, 2] == k[2, 0, 0] == k[2, 0, 2] == 0.0


@pytest.mark.parametrize('name', ['h3', 'h5', 'example'])
def test_contact_and_kenmotsu_identities(name, request):
    M = request.getfixturevalue(name)
    for p in M.base.sample_points(3, seed=5):
        assert max(contact_residuals(M, p).values()) < 1e-12
        assert max(kenmotsu_identity_residuals(M, p).values()) < 1e-6
        assert kenmotsu_condition_residual(M, p) < 1e-12
        assert max(lift_structure_residuals(M, p).values()) < 1e-6


def test_half_plane_fiber_is_holomorphic_statistical():
    fiber = catalog.example_fiber(1.0)
    assert max(holomorphic_residuals(fiber, [1.4, -0.3]).values()) < 1e-6


def test_kenmotsu_condition_detects_perturbation(h3):
    delta = np.zeros((3, 3, 3))
    delta[0, 2, 2] = 0.2
    base = replace(h3.base, ktensor=DifferenceTensorField(3, lambda q: h3.base.k(q) + delta))
    perturbed = KenmotsuStatisticalManifold(base=base, contact=h3.contact, c_bar=-1.0)
    assert kenmotsu_condition_residual(perturbed, [0.1, 0.2, 0.0]) == pytest.approx(0.2, abs=1e-12)


def test_manifold_of(h3, euclidean3):
    assert manifold_of(h3) is h3.base
    assert manifold_of(euclidean3) is euclidean3
    with pytest.raises(TypeError):
        manifold_of('euclidean')


def test_model_curvature_along_reeb_field():
    g, phi, xi = orthonormal_structure(1)
    F = np.array([1.0, 0.0, 0.0])
    assert_allclose(model_curvature(-1.0, g, phi, xi, xi, F, xi), F, atol=1e-15)


def test_model_ricci_coefficients():
    assert ricci_coefficients(-1.0, 1) == (-2.0, 0.0)
    g, _, xi = orthonormal_structure(1)
    E = np.array([0.0, 1.0, 0.0])
    assert model_ricci(-1.0, 1, E, E, g, xi) == pytest.approx(-2.0)


@pytest.mark.parametrize('c_bar', [-3.0, -1.0, 0.0, 0.5, 2.0])
@pytest.mark.parametrize('s', [1, 2, 3])
def test_model_trace_matches_closed_form(c_bar, s):
    g, phi, xi = orthonormal_structure(s)
    assert model_trace_residual(c_bar, s, g, phi, xi) < 1e-12


def test_model_is_never_ricci_flat():
    for s in (1, 2, 3):
        assert not any(is_ricci_flat(c, s) for c in np.linspace(-5.0, 5.0, 41))


@pytest.mark.parametrize('name', ['h3', 'h5'])
def test_hyperbolic_model_matches_curvature(name, request):
    M = request.getfixturevalue(name)
    p = M.base.sample_points(1, seed=9)[0]
    assert model_residual(M, p) < 1e-5
    assert max(ricci_identity_residuals(M, p).values()) < 1e-5


def test_model_residual_needs_declared_curvature(example):
    with pytest.raises(ValueError):
        model_residual(example, [1.0, 0.0, 0.0])


def test_flat_fiber_ricci():
    fiber = catalog.flat_fiber(1)
    assert fiber_ricci_check(fiber, -1.0, 0.3, [0.1, 0.2], [1.0, 2.0]) < 1e-9


@pytest.mark.parametrize('beta', [0.0, 0.5])
def test_reeb_identities_report_their_sign(beta):
    M = catalog.hyperbolic_kenmotsu(1, beta)
    identities = reeb_curvature_identities(M, [0.1, -0.2, 0.3])
    assert {key: value.matches for key, value in identities.items()} == {
        '1': 'negated', '2': 'negated', '3': 'negated', '4': 'as_printed', '5': 'negated',
    }
    assert all(min(value.as_printed, value.negated) < 1e-5 for value in identities.values())


def test_signed_residual_without_match():
    assert SignedResidual(0.5, 0.5).matches == 'neither'
    assert SignedResidual(0.0, 0.5).matches == 'as_printed'


def test_structure_jacobi_frame_starts_with_reeb_field(h5):
    frame = structure_jacobi_frame(h5, [0.1, 0.2, 0.3, 0.4, 0.2])
    assert_allclose(frame[0], [0.0, 0.0, 0.0, 0.0, 1.0])
    assert len(frame) == 5
