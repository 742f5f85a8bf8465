import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays
from numpy.testing import assert_allclose

from kenstat import catalog
from kenstat.chen_ricci import (
    COROLLARY_VARIANTS,
    RicciBoundInput,
    chain_residual,
    corollary_bounds,
    equality_case_check,
    form_hessian,
    hessian_form_check,
    kenmotsu_bracket,
    quadratic_form,
    quadratic_form_max,
    ricci_bound_rhs,
    verify_inequality,
)
from kenstat.exceptions import PreconditionError
from kenstat.submanifold import induced_geometry


def bound(**overrides):
    values = dict(c_bar=-1.0, k=1, P_E_norm_sq=0.0, g_E_xi=0.0, ric0_E=0.0, H_norm_sq=0.0, H_star_norm_sq=0.0)
    values.update(overrides)
    return RicciBoundInput(**values)


def test_bound_right_side_examples():
    assert ricci_bound_rhs(bound(ric0_E=-1.0)) == pytest.approx(-1.0)
    assert ricci_bound_rhs(bound(P_E_norm_sq=1.0, H_norm_sq=1.0, H_star_norm_sq=1.0)) == pytest.approx(0.0)


def test_bracket_at_minus_one_is_minus_k():
    for k in (1, 2, 5):
        assert kenmotsu_bracket(bound(k=k, P_E_norm_sq=0.4, g_E_xi=0.3)) == pytest.approx(-k)


@pytest.mark.parametrize('overrides', [
    {'g_E_xi': 1.5},
    {'k': 0},
    {'H_norm_sq': -0.1},
    {'P_E_norm_sq': 1.2},
])
def test_invalid_inputs(overrides):
    with pytest.raises(PreconditionError):
        bound(**overrides)


@given(
    arrays(np.float64, 4, elements=st.floats(-10.0, 10.0)),
    arrays(np.float64, 4, elements=st.floats(-10.0, 10.0)),
    st.integers(1, 6),
    st.floats(-3.0, 3.0),
    st.floats(-5.0, 5.0),
)
@settings(max_examples=1000, deadline=None)
def test_rewrite_with_levi_civita_mean_curvature(H, H_star, k, c_bar, ric0):
    H0 = 0.5 * (H + H_star)
    inp = bound(
        c_bar=c_bar, k=k, ric0_E=ric0, P_E_norm_sq=0.5, g_E_xi=0.2,
        H_norm_sq=float(H @ H), H_star_norm_sq=float(H_star @ H_star),
        H0_norm_sq=float(H0 @ H0), g_H_Hstar=float(H @ H_star),
    )
    scale = 1.0 + (k + 1) ** 2 * (inp.H_norm_sq + inp.H_star_norm_sq)
    assert corollary_bounds(inp, 'h0_rewrite') == pytest.approx(ricci_bound_rhs(inp), abs=1e-12 * scale)


def test_minimal_variant():
    H = np.array([1.0, 0.0])
    inp = bound(H_norm_sq=1.0, H_star_norm_sq=1.0, H0_norm_sq=0.0, g_H_Hstar=-1.0)
    assert corollary_bounds(inp, 'minimal') == pytest.approx(ricci_bound_rhs(inp))
    with pytest.raises(PreconditionError):
        corollary_bounds(bound(H_norm_sq=1.0, H0_norm_sq=float(H @ H)), 'minimal')


@pytest.mark.parametrize('c_bar', [-1.0, 0.0, 2.5])
def test_orthogonal_variants_agree_with_general_bound(c_bar):
    for P, variant in ((0.3, 'orthogonal'), (1.0, 'invariant'), (0.0, 'anti_invariant')):
        inp = bound(c_bar=c_bar, k=3, P_E_norm_sq=P, ric0_E=0.7, H_norm_sq=0.2, H_star_norm_sq=0.4)
        assert corollary_bounds(inp, variant) == pytest.approx(ricci_bound_rhs(inp))


def test_anti_invariant_at_minus_one():
    inp = bound(k=1)
    assert kenmotsu_bracket(inp) == pytest.approx(-1.0)
    assert corollary_bounds(inp, 'anti_invariant') == pytest.approx(1.0)


def test_orthogonal_variants_need_e_orthogonal_to_xi():
    with pytest.raises(PreconditionError):
        corollary_bounds(bound(g_E_xi=0.5), 'orthogonal')
    with pytest.raises(PreconditionError):
        corollary_bounds(bound(P_E_norm_sq=0.5), 'invariant')


def test_hyperbolic_variants():
    for k in (1, 2, 4):
        inp = bound(k=k, ric0_E=0.25, H_norm_sq=0.5)
        assert corollary_bounds(inp, 'hyperbolic') == pytest.approx(ricci_bound_rhs(inp))
    literal = bound(k=4, ric0_E=0.25)
    assert corollary_bounds(literal, 'hyperbolic_literal') == pytest.approx(ricci_bound_rhs(literal))
    small = bound(k=1)
    assert corollary_bounds(small, 'hyperbolic_literal') - ricci_bound_rhs(small) == pytest.approx(3.0)
    with pytest.raises(PreconditionError):
        corollary_bounds(bound(c_bar=0.0), 'hyperbolic')


def test_unknown_variant():
    assert 'hyperbolic_literal' in COROLLARY_VARIANTS
    with pytest.raises(ValueError):
        corollary_bounds(bound(), 'sasakian')


def test_fiber_slice_attains_equality():
    imm = catalog.build_immersion('fiber_slice')
    verdict = verify_inequality(imm, [0.2, -0.1], [1.0, 0.0])
    assert verdict.lhs == pytest.approx(0.0, abs=1e-5)
    assert verdict.rhs == pytest.approx(0.0, abs=1e-5)
    assert verdict.equality
    assert not verdict.violated(1e-5)
    assert verdict.inputs.H_norm_sq == pytest.approx(1.0, abs=1e-8)


def test_xalpha_plane_both_sides():
    imm = catalog.build_immersion('xalpha_plane')
    verdict = verify_inequality(imm, [0.1, 0.2], [1.0, 0.0])
    assert verdict.lhs == pytest.approx(-1.0, abs=1e-5)
    assert verdict.rhs == pytest.approx(-1.0, abs=1e-5)
    assert verdict.margin == pytest.approx(0.0, abs=1e-5)
    assert verdict.equality


def test_equality_conditions_on_xalpha_plane():
    imm = catalog.build_immersion('xalpha_plane')
    for u in imm.sample_points(3, seed=4):
        geom = induced_geometry(imm, u)
        for E in ([1.0, 0.0], [0.0, 1.0], [0.6, -0.8]):
            residuals = equality_case_check(geom, E)
            assert residuals.holds(1e-6), residuals


@pytest.mark.parametrize('name', ['tilted_plane', 'invariant_slice'])
def test_totally_geodesic_three_planes(name):
    imm = catalog.build_immersion(name)
    for seed in range(3):
        verdict = verify_inequality(imm, [0.1, -0.2, 0.1], seed=seed)
        assert verdict.inputs.k == 2
        assert abs(verdict.margin) < 1e-4


def test_graph_stays_strictly_inside_the_bound():
    imm = catalog.build_immersion('graph_perturbation')
    for u in imm.sample_points(5, seed=7):
        for seed in range(3):
            verdict = verify_inequality(imm, u, seed=seed)
            assert not verdict.violated(1e-5)
            assert verdict.margin > 1e-3
            assert not verdict.equality


def test_inequality_needs_declared_curvature():
    imm = catalog.build_immersion('example_fiber_slice')
    with pytest.raises(PreconditionError):
        verify_inequality(imm, [1.0, 0.0], [1.0, 0.0])


def test_equality_conditions_on_fiber_slice():
    geom = induced_geometry(catalog.build_immersion('fiber_slice'), [0.0, 0.3])
    residuals = equality_case_check(geom, [0.6, 0.8])
    assert residuals.holds()
    assert residuals.h_mixed < 1e-8


def test_equality_conditions_fail_on_graph():
    geom = induced_geometry(catalog.build_immersion('graph_perturbation'), [0.5, 0.0])
    assert not equality_case_check(geom, [1.0, 0.0]).holds()


def test_levi_civita_chain():
    imm = catalog.build_immersion('fiber_slice')
    geom = induced_geometry(imm, [0.1, 0.1], curvature=True)
    assert chain_residual(geom, [1.0, 1.0]) < 1e-5


@pytest.mark.parametrize('k_plus_1,a', [(2, 2.0), (3, -1.0), (4, 0.0), (5, 3.5)])
def test_quadratic_form_maximum(k_plus_1, a):
    result = quadratic_form_max(k_plus_1, a, brute_force=True)
    assert result.value == pytest.approx(a * a / 4.0)
    assert result.argmax.sum() == pytest.approx(a)
    assert quadratic_form(result.argmax) == pytest.approx(result.value)
    assert result.brute_value <= result.value + 1e-12
    assert result.brute_value == pytest.approx(result.value)


def test_quadratic_form_two_variables():
    result = quadratic_form_max(2, 2.0)
    assert result.value == 1.0
    assert_allclose(result.argmax, [1.0, 1.0])
    with pytest.raises(PreconditionError):
        quadratic_form_max(1, 2.0)


def test_hessian_form():
    assert hessian_form_check(2, [1.0, -1.0]).value == pytest.approx(-2.0)
    check = hessian_form_check(3, [1.0, 1.0, 1.0])
    assert check.projected
    assert check.value == pytest.approx(0.0)
    with pytest.raises(ValueError):
        hessian_form_check(3, [1.0, -1.0])
    assert_allclose(form_hessian(3), [[0.0, 1.0, 1.0], [1.0, 0.0, 0.0], [1.0, 0.0, 0.0]])


@given(st.integers(2, 7), arrays(np.float64, 7, elements=st.floats(-5.0, 5.0)))
@settings(max_examples=1000, deadline=None)
def test_hessian_is_negative_on_constraint_plane(k_plus_1, raw):
    v = raw[:k_plus_1] - raw[:k_plus_1].mean()
    value = hessian_form_check(k_plus_1, v).value
    assert value <= 1e-9
    assert value == pytest.approx(-2.0 * v[0] ** 2, abs=1e-9)
