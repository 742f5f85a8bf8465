import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays
from numpy.testing import assert_allclose

from kenstat.exceptions import DegenerateFrameError, DomainViolationError
from kenstat.tensor import (
    complete_frame,
    extend_frame,
    fd_derivative,
    fd_gradient,
    fd_hessian,
    frame_residual,
    gram_schmidt,
    inner,
    make_frame,
    symmetry_residual,
)


def test_derivative_of_square():
    assert fd_derivative(lambda p: p[0] ** 2, [1.0], 0) == pytest.approx(2.0, abs=1e-10)


def test_derivative_of_cubic_is_exact_after_refinement():
    assert fd_derivative(lambda p: p[0] ** 3, [2.0], 0) == pytest.approx(12.0, rel=1e-10)


def test_derivative_of_sine():
    assert fd_derivative(lambda p: np.sin(p[0]), [0.0], 0) == pytest.approx(1.0, abs=1e-10)


def test_derivative_of_fiber_metric_component():
    # g̃_11 = x on the half plane
    value = fd_derivative(lambda p: p[0], [2.0, 0.0], 0, domain=lambda p: p[0] > 0.0)
    assert value == pytest.approx(1.0, abs=1e-12)


def test_stencil_leaving_domain():
    with pytest.raises(DomainViolationError):
        fd_derivative(lambda p: np.log(p[0]), [0.005], 0, domain=lambda p: p[0] > 0.0)


def test_point_outside_domain():
    with pytest.raises(DomainViolationError):
        fd_derivative(lambda p: p[0], [-1.0], 0, domain=lambda p: p[0] > 0.0)


def test_non_finite_point():
    with pytest.raises(DomainViolationError):
        fd_derivative(lambda p: p[0], [np.nan], 0)


def test_gradient_stacks_derivatives_on_leading_axis():
    field = lambda p: np.array([p[0] * p[1], p[1] ** 2, 3.0 * p[0]])
    grad = fd_gradient(field, [1.0, 2.0])
    assert grad.shape == (2, 3)
    assert_allclose(grad, [[2.0, 0.0, 3.0], [1.0, 4.0, 0.0]], atol=1e-10)


def test_hessian_of_polynomial():
    hess = fd_hessian(lambda p: p[0] ** 2 * p[1] + p[1] ** 3, [0.5, -1.0])
    assert_allclose(hess, [[-2.0, 1.0], [1.0, -6.0]], atol=1e-7)


def test_gram_schmidt_rescales_under_conformal_metric():
    # g̃ = x[(dx)² + (dy)²] at x = 4
    g = 4.0 * np.eye(2)
    frame = gram_schmidt(make_frame([4.0, 0.0], [[1.0, 0.0]]), g)
    assert_allclose(frame.vectors, [[0.5, 0.0]])
    assert frame.orthonormal


def test_gram_schmidt_dependent_vectors():
    v = np.array([1.0, 2.0, 3.0])
    with pytest.raises(DegenerateFrameError):
        gram_schmidt(make_frame(np.zeros(3), [v, 2.0 * v]), np.eye(3))


def test_complete_frame_rejects_zero_vector():
    with pytest.raises(DegenerateFrameError):
        complete_frame(np.zeros(3), np.eye(3))


def test_make_frame_component_mismatch():
    with pytest.raises(DegenerateFrameError):
        make_frame(np.zeros(3), [[1.0, 0.0]])


def spd_matrices(dim):
    return arrays(np.float64, (dim, dim), elements=st.floats(-1.0, 1.0)).map(lambda a: a @ a.T + dim * np.eye(dim))


@st.composite
def metric_and_vectors(draw):
    dim = draw(st.integers(2, 7))
    g = draw(spd_matrices(dim))
    count = draw(st.integers(1, dim))
    noise = draw(arrays(np.float64, (count, dim), elements=st.floats(-0.1, 0.1)))
    return g, np.eye(dim)[:count] + noise


@given(metric_and_vectors())
@settings(max_examples=100, deadline=None)
def test_gram_schmidt_is_orthonormal_and_keeps_first_direction(data):
    g, vectors = data
    frame = gram_schmidt(make_frame(np.zeros(g.shape[0]), vectors), g)
    assert frame_residual(frame, g) < 1e-10
    first = vectors[0]
    scale = inner(g, frame[0], first)
    assert scale > 0.0
    assert_allclose(frame[0] * np.sqrt(inner(g, first, first)), first, atol=1e-10)


@given(metric_and_vectors(), st.integers(0, 2 ** 16))
@settings(max_examples=40, deadline=None)
def test_extend_frame_is_full_and_reproducible(data, seed):
    g, vectors = data
    base = make_frame(np.zeros(g.shape[0]), vectors[:1])
    first = extend_frame(base, g, seed=seed)
    second = extend_frame(base, g, seed=seed)
    assert len(first) == g.shape[0]
    assert frame_residual(first, g) < 1e-10
    assert np.array_equal(first.vectors, second.vectors)


def test_complete_frame_starts_with_normalised_vector():
    g = np.diag([np.e ** 2, np.e ** 2, 1.0])
    frame = complete_frame([0.0, 0.0, 2.0], g, seed=3)
    assert_allclose(frame[0], [0.0, 0.0, 1.0])
    assert frame_residual(frame, g) < 1e-12


def test_symmetry_residual():
    a = np.arange(9.0).reshape(3, 3)
    assert symmetry_residual(a + a.T, 0, 1) == 0.0
    assert symmetry_residual(a - a.T, 0, 1, sign=-1.0) == 0.0
    assert symmetry_residual(a, 0, 1) == pytest.approx(4.0)
