# -*- coding: utf-8 -*-
"""
Almost contact and Kenmotsu statistical structures

The warped product B̃ × ℝ carries ḡ = e^{2α} g̃ + dα², with the α coordinate
stored last. φ acts as J on the fiber and kills ξ = ∂_α.
"""

from __future__ import absolute_import

import logging
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from kenstat.curvature import apply, curvature_sample, lower, ricci_curvature
from kenstat.statistical import (
    DifferenceTensorField,
    MetricField,
    StatisticalManifold,
    coordinate_frame,
    levi_civita_christoffels,
)
from kenstat.tensor import DEFAULT_STEPS, complete_frame, fd_gradient, norm


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlmostContactData:
    """φ as a (1,1) matrix field and the Reeb field ξ"""
    phi: Callable
    xi: Callable

    def phi_at(self, p):
        return np.asarray(self.phi(p), dtype=float)

    def xi_at(self, p):
        return np.asarray(self.xi(p), dtype=float)

    def eta_at(self, g, p):
        return g @ self.xi_at(p)


@dataclass(frozen=True)
class HolomorphicStatisticalManifold:
    """An even-dimensional statistical manifold with a compatible J"""
    base: StatisticalManifold
    J: Callable

    @property
    def dim(self):
        return self.base.dim

    @property
    def s(self):
        return self.base.dim // 2

    def J_at(self, p):
        return np.asarray(self.J(p), dtype=float)


@dataclass(frozen=True)
class KenmotsuStatisticalManifold:
    """A statistical structure on a warped product B̃ × ℝ with its contact data"""
    base: StatisticalManifold
    contact: AlmostContactData
    c_bar: Optional[float] = None
    fiber: Optional[HolomorphicStatisticalManifold] = None

    @property
    def name(self):
        return self.base.name

    @property
    def dim(self):
        return self.base.dim

    @property
    def s(self):
        return (self.base.dim - 1) // 2

    def phi(self, p):
        return self.contact.phi_at(p)

    def xi(self, p):
        return self.contact.xi_at(p)

    def eta(self, p):
        return self.contact.eta_at(self.base.g(p), p)


def manifold_of(obj):
    """The underlying StatisticalManifold of a catalog manifold"""
    if isinstance(obj, KenmotsuStatisticalManifold):
        return obj.base
    if isinstance(obj, StatisticalManifold):
        return obj
    raise TypeError('not a catalog manifold: {!r}'.format(obj))


def _split(q):
    q = np.asarray(q, dtype=float)
    return q[:-1], q[-1]


def build_warped_contact(fiber):
    """
    Metric, φ and ξ on the product of the fiber with a line

    Returns:
        tuple: (MetricField of ḡ = e^{2α} g̃ ⊕ 1, AlmostContactData)
    """
    n = fiber.dim + 1

    def metric(q):
        x, alpha = _split(q)
        g = np.zeros((n, n))
        g[:-1, :-1] = np.exp(2.0 * alpha) * fiber.base.g(x)
        g[-1, -1] = 1.0
        return g

    def phi(q):
        x, _ = _split(q)
        m = np.zeros((n, n))
        m[:-1, :-1] = fiber.J_at(x)
        return m

    def xi(q):
        v = np.zeros(n)
        v[-1] = 1.0
        return v

    return MetricField(n, metric), AlmostContactData(phi=phi, xi=xi)


def _as_field(beta):
    if callable(beta):
        return beta
    value = float(beta)
    return lambda q: value


def lift_statistical_structure(fiber, beta=1.0, c_bar=None, name=None, alpha_range=(-0.5, 0.5), steps=DEFAULT_STEPS):
    """
    Kenmotsu statistical structure on B̃ × ℝ from a holomorphic statistical fiber

    K̄ equals the fiber K on fiber vectors, vanishes on mixed pairs and
    sends (ξ, ξ) to βξ.
    """
    metric, contact = build_warped_contact(fiber)
    n = metric.dim
    beta_field = _as_field(beta)

    def ktensor(q):
        x, _ = _split(q)
        k = np.zeros((n, n, n))
        k[:-1, :-1, :-1] = fiber.base.k(x)
        k[-1, -1, -1] = beta_field(q)
        return k

    def domain(q):
        x, _ = _split(q)
        return bool(fiber.base.domain(x))

    box = np.vstack([fiber.base.sampling_box(), np.asarray([alpha_range], dtype=float)])
    base = StatisticalManifold(
        name=name or '{}_lift'.format(fiber.base.name),
        dim=n,
        metric=metric,
        ktensor=DifferenceTensorField(n, ktensor),
        domain=domain,
        box=box,
        steps=steps,
    )
    logger.debug('lifted %s to a %d-dimensional warped product', fiber.base.name, n)
    return KenmotsuStatisticalManifold(base=base, contact=contact, c_bar=c_bar, fiber=fiber)


def _frame(M, p, frame):
    return coordinate_frame(M.base, p) if frame is None else frame


def contact_residuals(M, p):
    """Almost contact metric identities at p"""
    p = M.base.point(p)
    g = M.base.g(p)
    phi, xi = M.phi(p), M.xi(p)
    eta = g @ xi
    n = M.dim
    return {
        'phi_xi': float(np.max(np.abs(phi @ xi))),
        'eta_xi': abs(float(eta @ xi) - 1.0),
        'phi_squared': float(np.max(np.abs(phi @ phi + np.eye(n) - np.outer(xi, eta)))),
        'compatibility': float(np.max(np.abs(phi.T @ g @ phi - g + np.outer(eta, eta)))),
    }


def kenmotsu_identity_residuals(M, p):
    """
    Residuals of (∇^g_E φ)F = g(φE, F)ξ - η(F)φE and ∇^g_E ξ = E - η(E)ξ

    Both hold exactly when the fiber is Kähler.
    """
    p = M.base.point(p)
    g = M.base.g(p)
    gamma = levi_civita_christoffels(M.base, p)
    phi, xi = M.phi(p), M.xi(p)
    eta = g @ xi
    dphi = fd_gradient(M.contact.phi_at, p, M.base.steps.first, M.base.domain)
    dxi = fd_gradient(M.contact.xi_at, p, M.base.steps.first, M.base.domain)
    n = M.dim

    # nabla_phi[a, l, k]: components of (∇_∂a φ)∂k
    nabla_phi = dphi + np.einsum('lam,mk->alk', gamma, phi) - np.einsum('lm,mak->alk', phi, gamma)
    phi_low = g @ phi
    expected_phi = np.einsum('ka,l->alk', phi_low, xi) - np.einsum('k,la->alk', eta, phi)
    nabla_xi = dxi + np.einsum('lam,m->al', gamma, xi)
    expected_xi = np.eye(n) - np.outer(eta, xi)
    return {
        'nabla_phi': float(np.max(np.abs(nabla_phi - expected_phi))),
        'nabla_xi': float(np.max(np.abs(nabla_xi - expected_xi))),
    }


def holomorphic_residuals(fiber, p):
    """J² = -Id, J isometric, K(E, JF) = -J K(E, F) and ∇^g J = 0 at a fiber point"""
    base = fiber.base
    p = base.point(p)
    J = fiber.J_at(p)
    g = base.g(p)
    k = base.k(p)
    n = fiber.dim
    gamma = levi_civita_christoffels(base, p)
    dJ = fd_gradient(fiber.J_at, p, base.steps.first, base.domain)
    nabla_J = dJ + np.einsum('lam,mk->alk', gamma, J) - np.einsum('lm,mak->alk', J, gamma)
    k_jf = np.einsum('lim,mj->lij', k, J)
    j_k = np.einsum('lm,mij->lij', J, k)
    return {
        'j_squared': float(np.max(np.abs(J @ J + np.eye(n)))),
        'j_isometry': float(np.max(np.abs(J.T @ g @ J - g))),
        'holomorphic_k': float(np.max(np.abs(k_jf + j_k))),
        'kahler': float(np.max(np.abs(nabla_J))),
    }


def kenmotsu_condition_residual(M, p, frame=None):
    """max over frame pairs of |K̄(E, φF) + φK̄(E, F)|"""
    p = M.base.point(p)
    frame = _frame(M, p, frame)
    g = M.base.g(p)
    k = M.base.k(p)
    phi = M.phi(p)
    worst = 0.0
    for E in frame:
        k_e = np.einsum('lij,i->lj', k, E)
        for F in frame:
            worst = max(worst, norm(g, k_e @ (phi @ F) + phi @ (k_e @ F)))
    return worst


def lift_structure_residuals(M, p, frame=None):
    """
    Splits K̄ = A + Θξ and measures A(E, ξ) and Θ(E, F) for F ⊥ ξ

    A lifted structure gives zero for both, and its fiber must be
    holomorphic statistical.
    """
    p = M.base.point(p)
    frame = _frame(M, p, frame)
    g = M.base.g(p)
    k = M.base.k(p)
    xi = M.xi(p)
    eta = g @ xi
    theta = np.einsum('l,lij->ij', eta, k)
    a = k - np.einsum('ij,l->lij', theta, xi)
    a_xi = 0.0
    theta_mixed = 0.0
    for E in frame:
        a_xi = max(a_xi, norm(g, np.einsum('lij,i,j->l', a, E, xi)))
        for F in frame:
            F_h = F - float(eta @ F) * xi
            theta_mixed = max(theta_mixed, abs(float(E @ theta @ F_h)))
    result = {'a_xi': a_xi, 'theta_mixed': theta_mixed}
    if M.fiber is not None:
        x = p[:-1]
        result.update(('fiber_' + key, value) for key, value in holomorphic_residuals(M.fiber, x).items())
    return result


def model_tensor(c_bar, g, phi, xi):
    """Curvature of the constant φ-sectional curvature model as an array riem[l, i, j, k]"""
    a = (c_bar - 3.0) / 4.0
    b = (c_bar + 1.0) / 4.0
    n = g.shape[0]
    eye = np.eye(n)
    eta = g @ xi
    phi_low = np.einsum('mj,mk->jk', phi, g)
    space_form = np.einsum('jk,li->lijk', g, eye) - np.einsum('ik,lj->lijk', g, eye)
    phi_terms = (
        np.einsum('jk,li->lijk', phi_low, phi)
        - np.einsum('ik,lj->lijk', phi_low, phi)
        - 2.0 * np.einsum('ij,lk->lijk', phi_low, phi)
        - np.einsum('j,k,li->lijk', eta, eta, eye)
        + np.einsum('i,k,lj->lijk', eta, eta, eye)
        + np.einsum('j,ki,l->lijk', eta, g, xi)
        - np.einsum('i,kj,l->lijk', eta, g, xi)
    )
    return a * space_form + b * phi_terms


def model_curvature(c_bar, g, phi, xi, E, F, G):
    """R(E, F)G of a Kenmotsu space form with φ-sectional curvature c_bar"""
    return apply(model_tensor(c_bar, g, phi, xi), E, F, G)


def ricci_coefficients(c_bar, s):
    """(t1, t2) with Ric = t1 g + t2 η⊗η"""
    t1 = (c_bar * (s + 1) - 3 * s + 1) / 2.0
    t2 = -(c_bar + 1) * (s + 1) / 2.0
    return t1, t2


def model_ricci(c_bar, s, E, F, g, xi):
    t1, t2 = ricci_coefficients(c_bar, s)
    eta = g @ xi
    return t1 * float(E @ g @ F) + t2 * float(eta @ E) * float(eta @ F)


def is_ricci_flat(c_bar, s):
    """True only if both Ricci coefficients vanish, which never happens for s ≥ 1"""
    t1, t2 = ricci_coefficients(c_bar, s)
    return t1 == 0.0 and t2 == 0.0


def model_trace_residual(c_bar, s, g, phi, xi):
    """Frame trace of the model tensor against the closed-form Ricci tensor"""
    traced = np.einsum('lljk->jk', model_tensor(c_bar, g, phi, xi))
    t1, t2 = ricci_coefficients(c_bar, s)
    eta = g @ xi
    return float(np.max(np.abs(traced - (t1 * g + t2 * np.outer(eta, eta)))))


def model_residual(M, p, sample=None):
    """Componentwise gap between the lowered S̄ and the lowered model tensor"""
    if M.c_bar is None:
        raise ValueError('{} declares no φ-sectional curvature'.format(M.name))
    if sample is None:
        sample = curvature_sample(M.base, p)
    model = model_tensor(M.c_bar, sample.g, M.phi(sample.point), M.xi(sample.point))
    return float(np.max(np.abs(sample.lowered('statistical') - lower(model, sample.g))))


def fiber_ricci_expected(c_bar, s, alpha, g_ee):
    return float(np.exp(2.0 * alpha) * (c_bar + 1) * (s + 1) / 2.0 * g_ee)


def fiber_ricci_check(fiber, c_bar, alpha, p, E):
    """|Ric̃(E) - e^{2α}(c̄+1)(s+1)/2 g̃(E, E)| with the fiber's statistical curvature"""
    p = fiber.base.point(p)
    E = np.asarray(E, dtype=float)
    g_ee = float(E @ fiber.base.g(p) @ E)
    ricci = ricci_curvature(fiber.base, p, E) * g_ee
    return abs(ricci - fiber_ricci_expected(c_bar, fiber.s, alpha, g_ee))


@dataclass(frozen=True)
class SignedResidual:
    """An identity evaluated as printed and with its right side negated"""
    as_printed: float
    negated: float

    @property
    def matches(self):
        if min(self.as_printed, self.negated) > 1e-4:
            return 'neither'
        return 'as_printed' if self.as_printed <= self.negated else 'negated'


def reeb_curvature_identities(M, p, frame=None, sample=None):
    """
    The five curvature identities for K̄ = β η⊗η⊗ξ, under both signs

    Identity 4 is a Bianchi-type sum and holds as printed for any torsion
    free connection.
    """
    p = M.base.point(p)
    frame = _frame(M, p, frame)
    if sample is None:
        sample = curvature_sample(M.base, p)
    S, g = sample.S, sample.g
    phi, xi = M.phi(p), M.xi(p)
    eta = g @ xi
    worst = {key: [0.0, 0.0] for key in ('1', '2', '3', '4', '5')}

    def track(key, lhs, rhs):
        worst[key][0] = max(worst[key][0], norm(g, lhs - rhs) if np.ndim(lhs) else abs(lhs - rhs))
        worst[key][1] = max(worst[key][1], norm(g, lhs + rhs) if np.ndim(lhs) else abs(lhs + rhs))

    for E in frame:
        track('5', float(apply(S, E, xi, xi) @ g @ E), float(E @ g @ E) - float(eta @ E) ** 2)
        for F in frame:
            track('1', apply(S, E, F, xi), float(eta @ F) * E - float(eta @ E) * F)
            track('2', apply(S, xi, E, F), float(E @ g @ F) * xi - float(eta @ F) * E)
            track('3', apply(S, phi @ E, xi, F), float(eta @ F) * (phi @ E) - float((phi @ E) @ g @ F) * xi)
            lhs = apply(S, E, phi @ F, xi) + apply(S, xi, E, phi @ F)
            track('4', lhs, -apply(S, phi @ F, xi, E))
    return {key: SignedResidual(*values) for key, values in worst.items()}


def ricci_identity_residuals(M, p, frame=None, sample=None):
    """Ric(E, ξ) = -2s η(E) and Ric(φE, φF) = Ric(E, F) + 2s η(E)η(F) from the traced S̄"""
    p = M.base.point(p)
    frame = _frame(M, p, frame)
    if sample is None:
        sample = curvature_sample(M.base, p)
    ric = sample.ricci('statistical')
    g = sample.g
    phi, xi = M.phi(p), M.xi(p)
    eta = g @ xi
    s = M.s
    reeb, phi_pair, closed_form = 0.0, 0.0, 0.0
    for E in frame:
        reeb = max(reeb, abs(float(E @ ric @ xi) + 2 * s * float(eta @ E)))
        for F in frame:
            lhs = float((phi @ E) @ ric @ (phi @ F))
            rhs = float(E @ ric @ F) + 2 * s * float(eta @ E) * float(eta @ F)
            phi_pair = max(phi_pair, abs(lhs - rhs))
            if M.c_bar is not None:
                closed_form = max(closed_form, abs(float(E @ ric @ F) - model_ricci(M.c_bar, s, E, F, g, xi)))
    return {'ricci_xi': reeb, 'ricci_phi': phi_pair, 'ricci_model': closed_form}


def structure_jacobi_frame(M, p):
    """Orthonormal frame with ξ first"""
    p = M.base.point(p)
    return complete_frame(M.xi(p), M.base.g(p), base=p)
