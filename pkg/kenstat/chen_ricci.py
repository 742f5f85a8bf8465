# -*- coding: utf-8 -*-
"""
Chen-Ricci inequality for submanifolds of Kenmotsu statistical manifolds

Left side: the Ricci curvature of N along a unit vector E built from the
statistical curvature S = (R + R*)/2 of the induced pair. Right side:

    2 Ric⁰(E) - X - (k+1)²/8 (||H||² + ||H*||²)
    X = 3(c̄+1)/4 ||PE||² + k/4 [(c̄+1)(1 - g(E, ξ)²) - 4]

with dim N = k + 1 and Ric⁰ the Ricci curvature of the induced metric.
"""

from __future__ import absolute_import

import logging
from dataclasses import dataclass

import numpy as np

from kenstat.exceptions import PreconditionError
from kenstat.submanifold import induced_geometry, intrinsic_ricci, mean_curvatures, pc_decomposition
from kenstat.tensor import complete_frame, norm


logger = logging.getLogger(__name__)


PRECONDITION_TOLERANCE = 1e-9
EQUALITY_TOLERANCE = 1e-6


@dataclass(frozen=True)
class RicciBoundInput:
    c_bar: float
    k: int
    P_E_norm_sq: float
    g_E_xi: float
    ric0_E: float
    H_norm_sq: float
    H_star_norm_sq: float
    H0_norm_sq: float = 0.0
    g_H_Hstar: float = 0.0

    def __post_init__(self):
        slack = PRECONDITION_TOLERANCE
        if self.k < 1:
            raise PreconditionError('k = dim N - 1 must be at least 1, got {}'.format(self.k))
        for name in ('P_E_norm_sq', 'H_norm_sq', 'H_star_norm_sq', 'H0_norm_sq'):
            if getattr(self, name) < -slack:
                raise PreconditionError('{} must be non-negative'.format(name))
        if abs(self.g_E_xi) > 1.0 + slack:
            raise PreconditionError('|g(E, ξ)| exceeds 1 for a unit vector')
        if self.P_E_norm_sq > 1.0 + slack:
            raise PreconditionError('||PE||² exceeds 1 for a unit vector')


def kenmotsu_bracket(inp):
    """The curly-braced ambient term X of the bound"""
    c, k = inp.c_bar, inp.k
    return 3.0 * (c + 1.0) / 4.0 * inp.P_E_norm_sq + k / 4.0 * ((c + 1.0) * (1.0 - inp.g_E_xi ** 2) - 4.0)


def _mean_term(inp):
    return (inp.k + 1) ** 2 / 8.0 * (inp.H_norm_sq + inp.H_star_norm_sq)


def ricci_bound_rhs(inp):
    return 2.0 * inp.ric0_E - kenmotsu_bracket(inp) - _mean_term(inp)


def _require(condition, message):
    if not condition:
        raise PreconditionError(message)


def _zero(value):
    return abs(value) <= PRECONDITION_TOLERANCE


COROLLARY_VARIANTS = (
    'h0_rewrite', 'minimal', 'orthogonal', 'invariant', 'anti_invariant', 'hyperbolic', 'hyperbolic_literal',
)


def corollary_bounds(inp, variant):
    """
    Right side of a specialised form of the bound

    Variants:
        h0_rewrite: mean-curvature term written with H⁰ and g(H, H*)
        minimal: H⁰ = 0
        orthogonal: E ⊥ ξ
        invariant: E ⊥ ξ and ||PE||² = 1
        anti_invariant: E ⊥ ξ and PE = 0
        hyperbolic: c̄ = -1, additive constant k
        hyperbolic_literal: c̄ = -1, additive constant 4 as displayed; agrees with k only at k = 4

    Raises:
        PreconditionError: the variant's hypothesis does not hold for `inp`
    """
    k, c = inp.k, inp.c_bar
    rewrite = -(k + 1) ** 2 / 2.0 * inp.H0_norm_sq + (k + 1) ** 2 / 4.0 * inp.g_H_Hstar
    if variant == 'h0_rewrite':
        return 2.0 * inp.ric0_E - kenmotsu_bracket(inp) + rewrite
    if variant == 'minimal':
        _require(_zero(inp.H0_norm_sq), 'minimal variant needs ||H⁰||² = 0')
        return 2.0 * inp.ric0_E - kenmotsu_bracket(inp) + (k + 1) ** 2 / 4.0 * inp.g_H_Hstar
    if variant in ('orthogonal', 'invariant', 'anti_invariant'):
        _require(_zero(inp.g_E_xi), '{} variant needs g(E, ξ) = 0'.format(variant))
        if variant == 'orthogonal':
            bracket = 3.0 * (c + 1.0) / 4.0 * inp.P_E_norm_sq + (c - 3.0) * k / 4.0
        elif variant == 'invariant':
            _require(_zero(inp.P_E_norm_sq - 1.0), 'invariant variant needs ||PE||² = 1')
            bracket = (c * (k + 3) + 3.0 * (1 - k)) / 4.0
        else:
            _require(_zero(inp.P_E_norm_sq), 'anti-invariant variant needs PE = 0')
            bracket = k * (c - 3.0) / 4.0
        return 2.0 * inp.ric0_E - bracket - _mean_term(inp)
    if variant in ('hyperbolic', 'hyperbolic_literal'):
        _require(_zero(c + 1.0), '{} variant needs c̄ = -1'.format(variant))
        constant = float(k) if variant == 'hyperbolic' else 4.0
        return 2.0 * inp.ric0_E + constant - _mean_term(inp)
    raise ValueError('unknown corollary variant: {}'.format(variant))


def unit_vector(geom, E=None, seed=0):
    """E normalised in the induced metric; a seeded random direction when E is None"""
    if E is None:
        E = np.random.default_rng(np.random.SeedSequence(seed)).standard_normal(geom.src_dim)
    E = np.asarray(E, dtype=float)
    length = norm(geom.induced_g, E)
    if length == 0.0:
        raise PreconditionError('direction has zero length')
    return E / length


def bound_input(geom, E, seed=0):
    """Measures every input of the bound at a unit source vector E"""
    if geom.c_bar is None:
        raise PreconditionError('ambient declares no constant φ-sectional curvature')
    means = mean_curvatures(geom)
    return RicciBoundInput(
        c_bar=geom.c_bar,
        k=geom.k,
        P_E_norm_sq=pc_decomposition(geom, E).P_norm_sq,
        g_E_xi=float(geom.push(E) @ geom.g_bar @ geom.xi),
        ric0_E=intrinsic_ricci(geom, E, 'levi-civita', seed=seed),
        H_norm_sq=means.H_norm_sq,
        H_star_norm_sq=means.H_star_norm_sq,
        H0_norm_sq=means.H0_norm_sq,
        g_H_Hstar=means.g_H_Hstar,
    )


@dataclass(frozen=True)
class EqualityResiduals:
    h_diagonal: float
    h_star_diagonal: float
    h_mixed: float
    h_star_mixed: float

    @property
    def maximum(self):
        return max(self.h_diagonal, self.h_star_diagonal, self.h_mixed, self.h_star_mixed)

    def holds(self, tol=EQUALITY_TOLERANCE):
        return self.maximum < tol


def equality_case_check(geom, E, seed=0):
    """
    Residuals of the equality conditions at a unit source vector E

    2h(E, E) = (k+1)H, 2h*(E, E) = (k+1)H*, and h(E, F) = h*(E, F) = 0 for
    F ⊥ E in a completed tangent frame.
    """
    g = geom.g_bar
    means = mean_curvatures(geom)
    m = geom.src_dim
    frame = complete_frame(E, geom.induced_g, seed=seed, base=geom.point)
    e1 = frame[0]
    others = frame.vectors[1:]

    def mixed(which):
        return max((norm(g, geom.form(which, e1, f)) for f in others), default=0.0)

    return EqualityResiduals(
        h_diagonal=norm(g, 2.0 * geom.form('h', e1, e1) - m * means.H),
        h_star_diagonal=norm(g, 2.0 * geom.form('h_star', e1, e1) - m * means.H_star),
        h_mixed=mixed('h'),
        h_star_mixed=mixed('h_star'),
    )


@dataclass(frozen=True)
class InequalityVerdict:
    lhs: float
    rhs: float
    margin: float
    equality: bool
    equality_conditions: EqualityResiduals
    inputs: RicciBoundInput

    def violated(self, tol):
        return self.margin < -tol


def verify_inequality(imm, u, E=None, seed=0, geom=None, equality_tol=EQUALITY_TOLERANCE):
    """
    Both sides of the bound at the source point u and source direction E

    A negative margin is reported, never raised.
    """
    if geom is None:
        geom = induced_geometry(imm, u, seed=seed, curvature=True)
    E = unit_vector(geom, E, seed)
    inp = bound_input(geom, E, seed)
    lhs = intrinsic_ricci(geom, E, 'statistical', seed=seed)
    rhs = ricci_bound_rhs(inp)
    residuals = equality_case_check(geom, E, seed)
    verdict = InequalityVerdict(
        lhs=lhs,
        rhs=rhs,
        margin=lhs - rhs,
        equality=residuals.holds(equality_tol),
        equality_conditions=residuals,
        inputs=inp,
    )
    logger.debug('%s at %s: lhs %.6g rhs %.6g', imm.name, u, lhs, rhs)
    return verdict


def chain_residual(geom, E, seed=0):
    """
    |Ric⁰(E) - X - Σ_{i≥2} [ḡ(h⁰(e1, e1), h⁰(e_i, e_i)) - ||h⁰(e1, e_i)||²]|

    the Levi-Civita Gauss equation traced along E.
    """
    E = unit_vector(geom, E, seed)
    inp = bound_input(geom, E, seed)
    frame = complete_frame(E, geom.induced_g, seed=seed, base=geom.point)
    e1 = frame[0]
    g = geom.g_bar
    diagonal = geom.form('h0', e1, e1)
    total = 0.0
    for e in frame.vectors[1:]:
        mixed = geom.form('h0', e1, e)
        total += float(diagonal @ g @ geom.form('h0', e, e)) - float(mixed @ g @ mixed)
    return abs(inp.ric0_E - kenmotsu_bracket(inp) - total)


@dataclass(frozen=True)
class QuadraticMax:
    value: float
    argmax: np.ndarray
    brute_value: float = None
    brute_argmax: np.ndarray = None


def quadratic_form(x):
    """x1 · Σ_{i≥2} x_i"""
    x = np.asarray(x, dtype=float)
    return x[..., 0] * np.sum(x[..., 1:], axis=-1)


def quadratic_form_max(k_plus_1, a, brute_force=False, points=21, span=None):
    """
    Maximum of x1 · Σ_{i≥2} x_i on the plane Σ x_i = a

    The closed form is a²/4 at x1 = a/2 with the rest split evenly. With
    `brute_force` the form is also maximised over a lattice of the free
    coordinates x1..x_k centred on that point, x_{k+1} fixed by the
    constraint; an odd `points` keeps the centre on the lattice.
    """
    if k_plus_1 < 2:
        raise PreconditionError('the form needs at least two variables')
    a = float(a)
    argmax = np.full(k_plus_1, a / (2.0 * (k_plus_1 - 1)))
    argmax[0] = a / 2.0
    result = QuadraticMax(value=a * a / 4.0, argmax=argmax)
    if not brute_force:
        return result

    span = max(1.0, abs(a)) if span is None else span
    axes = [np.linspace(c - span, c + span, points) for c in argmax[:-1]]
    grid = np.stack(np.meshgrid(*axes, indexing='ij'), axis=-1).reshape(-1, k_plus_1 - 1)
    lattice = np.concatenate([grid, (a - grid.sum(axis=1))[:, None]], axis=1)
    values = quadratic_form(lattice)
    best = int(np.argmax(values))
    return QuadraticMax(
        value=result.value,
        argmax=argmax,
        brute_value=float(values[best]),
        brute_argmax=lattice[best],
    )


@dataclass(frozen=True)
class HessianCheck:
    value: float
    projected: bool


def form_hessian(k_plus_1):
    hessian = np.zeros((k_plus_1, k_plus_1))
    hessian[0, 1:] = hessian[1:, 0] = 1.0
    return hessian


def hessian_form_check(k_plus_1, direction):
    """
    Hessian quadratic form of x1 · Σ_{i≥2} x_i along a constraint-plane direction

    Off-plane directions are projected onto Σ v_i = 0 and flagged; on the
    plane the value is -2 v1².
    """
    v = np.asarray(direction, dtype=float)
    if v.shape != (k_plus_1,):
        raise ValueError('direction needs {} components'.format(k_plus_1))
    projected = abs(float(v.sum())) > PRECONDITION_TOLERANCE * max(1.0, float(np.abs(v).max()))
    if projected:
        logger.info('direction %s is off the constraint plane; projecting', v)
        v = v - v.mean()
    return HessianCheck(value=float(v @ form_hessian(k_plus_1) @ v), projected=projected)
