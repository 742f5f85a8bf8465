# -*- coding: utf-8 -*-
"""
Curvature of affine connections given by Christoffel fields

Sign convention: R(X, Y)Z = ∇_X∇_Y Z - ∇_Y∇_X Z - ∇_[X,Y] Z, stored as
riem[l, i, j, k], the ∂_l component of R(∂_i, ∂_j)∂_k.
"""

from __future__ import absolute_import

import logging
from dataclasses import dataclass

import numpy as np

from kenstat.exceptions import DegenerateFrameError, DegeneratePlaneError
from kenstat.statistical import connection_field, coordinate_frame, dual_christoffels, levi_civita_christoffels
from kenstat.tensor import complete_frame, fd_gradient, gram_schmidt, make_frame, norm


logger = logging.getLogger(__name__)


SELECTORS = ('statistical', 'primal', 'dual', 'levi-civita')


def riemann(gamma_field, p, step, domain=None):
    """Curvature components from a Christoffel field by one extra finite difference"""
    gamma = np.asarray(gamma_field(p), dtype=float)
    dgamma = fd_gradient(gamma_field, p, step, domain)
    return (
        np.einsum('iljk->lijk', dgamma)
        - np.einsum('jlik->lijk', dgamma)
        + np.einsum('lim,mjk->lijk', gamma, gamma)
        - np.einsum('ljm,mik->lijk', gamma, gamma)
    )


def k_commutator(k):
    """[K_∂i, K_∂j]∂k as an array shaped like riem"""
    return np.einsum('lim,mjk->lijk', k, k) - np.einsum('ljm,mik->lijk', k, k)


def lower(riem, g):
    """low[i, j, k, h] = g(R(∂i, ∂j)∂k, ∂h)"""
    return np.einsum('hl,lijk->ijkh', g, riem)


def apply(riem, e, f, v):
    """The vector R(e, f)v"""
    return np.einsum('lijk,i,j,k->l', riem, e, f, v)


@dataclass(frozen=True)
class CurvatureSample:
    """Connections and curvature tensors of one manifold at one point"""
    point: np.ndarray
    frame: object
    g: np.ndarray
    k: np.ndarray
    gamma: np.ndarray
    gamma_star: np.ndarray
    gamma_lc: np.ndarray
    R: np.ndarray
    R_star: np.ndarray
    R_lc: np.ndarray
    S: np.ndarray

    @property
    def S_average(self):
        return 0.5 * (self.R + self.R_star)

    def tensor(self, selector='statistical'):
        if selector == 'statistical':
            return self.S
        if selector == 'primal':
            return self.R
        if selector == 'dual':
            return self.R_star
        if selector in ('levi-civita', 'lc'):
            return self.R_lc
        raise ValueError('unknown curvature selector: {}'.format(selector))

    def lowered(self, selector='statistical'):
        return lower(self.tensor(selector), self.g)

    def ricci(self, selector='statistical'):
        """Ric(X, Y) = trace of Z -> R(Z, X)Y"""
        return np.einsum('lljk->jk', self.tensor(selector))

    def dual_path_residual(self):
        """S from the Levi-Civita curvature and [K, K] against the average of R and R*"""
        return float(np.max(np.abs(self.S - self.S_average)))

    def antisymmetry_residual(self):
        return max(
            float(np.max(np.abs(t + np.swapaxes(t, 1, 2))))
            for t in (self.R, self.R_star, self.R_lc)
        )

    def pairing_residual(self):
        """Residual of g(R(E,F)G, H) = -g(G, R*(E,F)H)"""
        low = self.lowered('primal')
        low_star = self.lowered('dual')
        return float(np.max(np.abs(low + np.swapaxes(low_star, 2, 3))))


def curvature_sample(M, p, frame=None):
    """Evaluates every connection and curvature tensor of M at p"""
    p = M.point(p)
    if frame is None:
        frame = coordinate_frame(M, p)
    gamma, gamma_star = dual_christoffels(M, p)
    gamma_lc = levi_civita_christoffels(M, p)
    k = M.k(p)
    step = M.steps.second
    r_lc = riemann(connection_field(M, 'levi-civita'), p, step, M.domain)
    sample = CurvatureSample(
        point=p,
        frame=frame,
        g=M.g(p),
        k=k,
        gamma=gamma,
        gamma_star=gamma_star,
        gamma_lc=gamma_lc,
        R=riemann(connection_field(M, 'primal'), p, step, M.domain),
        R_star=riemann(connection_field(M, 'dual'), p, step, M.domain),
        R_lc=r_lc,
        S=r_lc + k_commutator(k),
    )
    logger.debug('curvature sample of %s at %s', M.name, p)
    return sample


def connection_curvature(M, selector, p, E, F, G):
    """R(E, F)G for the primal, dual or levi-civita connection of M"""
    if selector == 'statistical':
        raise ValueError('use statistical_curvature for S')
    p = M.point(p)
    return apply(riemann(connection_field(M, selector), p, M.steps.second, M.domain), E, F, G)


def statistical_curvature(M, p, E, F, G):
    """
    S(E, F)G by R^g(E,F)G + [K_E, K_F]G, with the cross-check residual

    Returns:
        tuple: (the vector S(E, F)G, max |S - (R + R*)/2| over components)
    """
    sample = curvature_sample(M, p)
    return apply(sample.S, E, F, G), sample.dual_path_residual()


def orthonormal_plane(g, E, F):
    """g-orthonormal basis of span{E, F}"""
    try:
        frame = gram_schmidt(make_frame(np.zeros(len(E)), [E, F]), g)
    except DegenerateFrameError:
        raise DegeneratePlaneError('vectors {} and {} do not span a plane'.format(E, F))
    return frame[0], frame[1]


def plane_value(sample, E, F, selector='statistical'):
    e1, e2 = orthonormal_plane(sample.g, E, F)
    return float(np.einsum('ijkh,i,j,k,h->', sample.lowered(selector), e1, e2, e2, e1))


def sectional_curvature(M, p, E, F, form='statistical', sample=None):
    """
    g(S(E, F)F, E) on the plane spanned by E and F

    `form='averaged'` evaluates the same number as the mean of the ∇ and ∇*
    sectional values; `form='levi-civita'` uses R^g.
    """
    if sample is None:
        sample = curvature_sample(M, p)
    if form == 'averaged':
        return 0.5 * (plane_value(sample, E, F, 'primal') + plane_value(sample, E, F, 'dual'))
    return plane_value(sample, E, F, form)


def ricci_curvature(M, p, E, selector='statistical', seed=0, sample=None):
    """Σ_{i≥2} g(S(e_i, E)E, e_i) over a completed frame with e_1 = E/|E|"""
    if sample is None:
        sample = curvature_sample(M, p)
    frame = complete_frame(E, sample.g, seed=seed, base=sample.point)
    low = sample.lowered('statistical' if selector == 'statistical' else 'levi-civita')
    e1 = frame[0]
    return float(sum(np.einsum('ijkh,i,j,k,h->', low, e, e1, e1, e) for e in frame.vectors[1:]))


def jacobi_operator(M, p, anchor, F, selector='statistical', sample=None):
    """R(F, anchor)anchor"""
    if sample is None:
        sample = curvature_sample(M, p)
    return apply(sample.tensor(selector), F, anchor, anchor)


def _jacobi_matrix(M, xi_field, selector):
    """Field q -> matrix of E -> R(E, ξ)ξ"""

    def matrix(q):
        if selector == 'statistical':
            riem = riemann(connection_field(M, 'levi-civita'), q, M.steps.second, M.domain) + k_commutator(M.k(q))
        else:
            riem = riemann(connection_field(M, selector), q, M.steps.second, M.domain)
        xi = xi_field(q)
        return np.einsum('lkab,a,b->lk', riem, xi, xi)

    return matrix


@dataclass(frozen=True)
class ParallelismResidual:
    """Jacobi parallelism residuals; `projected` restricts to ξ-orthogonal arguments and values"""
    projected: float
    full: float


def jacobi_parallelism_residual(M, xi_field, p, directions=None, selector='statistical', connections=('primal', 'dual')):
    """
    Max of |(∇_F R_ξ)E| over frame vectors F and E

    The operator field is differentiated once more by finite differences,
    so the budget is that of a third derivative of the metric. Both the
    full residual and the one restricted to E ⊥ ξ with values projected to
    ξ^⊥ are returned; the maximum over the requested connections is taken.
    """
    p = M.point(p)
    g = M.g(p)
    xi = xi_field(p)
    if directions is None:
        directions = complete_frame(xi, g, base=p)
    field = _jacobi_matrix(M, xi_field, selector)
    jac = field(p)
    djac = fd_gradient(field, p, M.steps.third, M.domain)
    eta = g @ xi
    projector = np.eye(M.dim) - np.outer(xi, eta)
    gammas = dict(zip(('primal', 'dual'), dual_christoffels(M, p)))
    gammas['levi-civita'] = levi_civita_christoffels(M, p)

    projected, full = 0.0, 0.0
    for which in connections:
        gamma = gammas[which]
        for F in directions:
            cov = (
                np.einsum('a,alk->lk', F, djac)
                + np.einsum('a,lam,mk->lk', F, gamma, jac)
                - np.einsum('a,lm,mak->lk', F, jac, gamma)
            )
            for E in directions:
                value = cov @ E
                full = max(full, norm(g, value))
                if abs(float(eta @ E)) < 1e-9 * max(1.0, norm(g, E)):
                    projected = max(projected, norm(g, projector @ value))
    return ParallelismResidual(projected=projected, full=full)
