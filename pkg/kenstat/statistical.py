# -*- coding: utf-8 -*-
"""
Statistical manifolds given by a metric and a difference tensor

A statistical structure is stored as (g, K) with K = ∇ - ∇^g. The dual pair
is then Γ = Γ^g + K and Γ* = Γ^g - K, so torsion-freeness and the duality
identity hold by construction up to finite-difference error.
"""

from __future__ import absolute_import

import logging
from dataclasses import dataclass, field, replace
from itertools import permutations
from typing import Callable

import numpy as np

from kenstat.exceptions import DomainViolationError, SingularMetricError
from kenstat.tensor import DEFAULT_STEPS, StepSizes, as_point, fd_gradient, gram_schmidt, make_frame


logger = logging.getLogger(__name__)


CONDITION_LIMIT = 1e12


def _always(_point):
    return True


@dataclass(frozen=True)
class MetricField:
    """Metric components g_ij as a function of the chart point"""
    dim: int
    eval: Callable

    def __call__(self, p):
        return np.asarray(self.eval(p), dtype=float).reshape(self.dim, self.dim)


@dataclass(frozen=True)
class DifferenceTensorField:
    """Difference tensor components K[k, i, j] = K^k_ij"""
    dim: int
    eval: Callable

    def __call__(self, p):
        return np.asarray(self.eval(p), dtype=float).reshape(self.dim, self.dim, self.dim)

    def scaled(self, factor):
        return DifferenceTensorField(self.dim, lambda p, inner=self.eval: factor * np.asarray(inner(p), dtype=float))


def zero_ktensor(dim):
    return DifferenceTensorField(dim, lambda p: np.zeros((dim, dim, dim)))


@dataclass(frozen=True)
class StatisticalManifold:
    """Chart, metric, difference tensor, domain predicate and sampling box"""
    name: str
    dim: int
    metric: MetricField
    ktensor: DifferenceTensorField
    domain: Callable = _always
    box: np.ndarray = None
    steps: StepSizes = field(default=DEFAULT_STEPS)

    def contains(self, p):
        p = np.asarray(p, dtype=float)
        return p.shape == (self.dim,) and bool(np.all(np.isfinite(p))) and bool(self.domain(p))

    def point(self, coords):
        """Validates chart coordinates against the domain"""
        p = as_point(coords)
        if not self.contains(p):
            raise DomainViolationError('{} is outside the domain of {}'.format(p, self.name))
        return p

    def g(self, p):
        return self.metric(p)

    def k(self, p):
        return self.ktensor(p)

    def metric_derivatives(self, p):
        """dg[a, i, j] = ∂_a g_ij"""
        return fd_gradient(self.metric, p, self.steps.first, self.domain)

    def dual(self):
        """The statistical manifold (∇*, g), i.e. K replaced by -K"""
        return replace(self, name='{}*'.format(self.name), ktensor=self.ktensor.scaled(-1.0))

    def sampling_box(self):
        if self.box is None:
            return np.array([[-1.0, 1.0]] * self.dim)
        return np.asarray(self.box, dtype=float)

    def sample_points(self, count, seed=0, max_attempts=10000):
        """Rejection-samples points of the box that satisfy the domain predicate"""
        box = self.sampling_box()
        rng = np.random.default_rng(np.random.SeedSequence(seed))
        points = []
        attempts = 0
        while len(points) < count:
            attempts += 1
            if attempts > max_attempts:
                raise DomainViolationError('sampling box of {} misses its domain'.format(self.name))
            candidate = box[:, 0] + (box[:, 1] - box[:, 0]) * rng.random(self.dim)
            if self.domain(candidate):
                points.append(candidate)
        return points


def make_manifold(name, dim, metric, ktensor=None, domain=None, box=None, steps=DEFAULT_STEPS):
    """Wraps plain callables into a StatisticalManifold"""
    return StatisticalManifold(
        name=name,
        dim=dim,
        metric=metric if isinstance(metric, MetricField) else MetricField(dim, metric),
        ktensor=(ktensor if isinstance(ktensor, DifferenceTensorField)
                 else zero_ktensor(dim) if ktensor is None else DifferenceTensorField(dim, ktensor)),
        domain=domain or _always,
        box=None if box is None else np.asarray(box, dtype=float),
        steps=steps,
    )


def inverse_metric(g):
    """Inverse of the metric matrix, rejecting singular or ill-conditioned input"""
    try:
        if np.linalg.cond(g) > CONDITION_LIMIT:
            raise np.linalg.LinAlgError('condition number too large')
        return np.linalg.inv(g)
    except np.linalg.LinAlgError as err:
        raise SingularMetricError('metric is not invertible: {}'.format(err))


def koszul(g, dg):
    """Levi-Civita symbols Γ^k_ij from g and dg[a, i, j] = ∂_a g_ij"""
    ginv = inverse_metric(g)
    lowered = np.transpose(dg, (1, 0, 2)) + np.transpose(dg, (1, 2, 0)) - dg
    return 0.5 * np.einsum('kl,lij->kij', ginv, lowered)


def levi_civita_christoffels(M, p):
    """Γ^k_ij of the Levi-Civita connection of M's metric at p"""
    p = M.point(p)
    return koszul(M.g(p), M.metric_derivatives(p))


def dual_christoffels(M, p):
    """Returns (Γ, Γ*) = (Γ^g + K, Γ^g - K)"""
    p = M.point(p)
    gamma_lc = koszul(M.g(p), M.metric_derivatives(p))
    k = M.k(p)
    return gamma_lc + k, gamma_lc - k


def connection_field(M, which='primal'):
    """Returns p -> Γ for the primal, dual or levi-civita connection of M"""
    if which in ('primal', 'nabla'):
        return lambda p: dual_christoffels(M, p)[0]
    if which in ('dual', 'nabla_star'):
        return lambda p: dual_christoffels(M, p)[1]
    if which in ('levi-civita', 'levi_civita', 'lc'):
        return lambda p: levi_civita_christoffels(M, p)
    raise ValueError('unknown connection: {}'.format(which))


def dual_connection(gamma, g, dg):
    """
    Dual of an arbitrary connection through the duality identity

    ∂_k g_ij = g(∇_k ∂_i, ∂_j) + g(∂_i, ∇*_k ∂_j) solved for Γ*.
    """
    ginv = inverse_metric(g)
    lowered = np.einsum('mj,mki->kij', g, gamma)
    return np.einsum('li,kij->lkj', ginv, dg - lowered)


def coordinate_frame(M, p):
    """Orthonormalized coordinate basis at p"""
    p = M.point(p)
    return gram_schmidt(make_frame(p, np.eye(M.dim)), M.g(p))


@dataclass(frozen=True)
class StatisticalResiduals:
    duality: float
    codazzi: float
    k_symmetry: float
    self_adjointness: float
    torsion: float

    @property
    def maximum(self):
        return max(self.duality, self.codazzi, self.k_symmetry, self.self_adjointness, self.torsion)


def check_statistical(M, p, frame=None):
    """
    Residuals of the statistical-structure axioms over all frame triples

    Fields are frozen-component extensions of the frame vectors, so the
    directional derivative of g(E, F) along G is dg contracted with the
    components.
    """
    p = M.point(p)
    if frame is None:
        frame = coordinate_frame(M, p)
    V = frame.vectors
    g = M.g(p)
    dg = M.metric_derivatives(p)
    gamma_lc = koszul(g, dg)
    k = M.k(p)
    gamma, gamma_star = gamma_lc + k, gamma_lc - k

    derivative = np.einsum('ai,ijk,bj,ck->abc', V, dg, V, V)
    along = np.einsum('kij,ai,bj->abk', gamma, V, V)
    along_star = np.einsum('kij,ai,bj->abk', gamma_star, V, V)
    paired = np.einsum('abk,kl,cl->abc', along, g, V)
    paired_star = np.einsum('bk,kl,acl->abc', V, g, along_star)
    duality = derivative - paired - paired_star

    nabla_g = derivative - paired - np.transpose(paired, (0, 2, 1))
    codazzi = nabla_g - np.transpose(nabla_g, (1, 0, 2))

    k_frame = np.einsum('kij,ai,bj->abk', k, V, V)
    k_sym = k_frame - np.transpose(k_frame, (1, 0, 2))
    k_sym_norm = np.sqrt(np.abs(np.einsum('abk,kl,abl->ab', k_sym, g, k_sym)))
    k_paired = np.einsum('abk,kl,cl->abc', k_frame, g, V)
    self_adjoint = k_paired - np.einsum('bk,kl,acl->abc', V, g, k_frame)

    torsion = max(
        float(np.max(np.abs(gamma - np.transpose(gamma, (0, 2, 1))))),
        float(np.max(np.abs(gamma_star - np.transpose(gamma_star, (0, 2, 1))))),
    )
    return StatisticalResiduals(
        duality=float(np.max(np.abs(duality))),
        codazzi=float(np.max(np.abs(codazzi))),
        k_symmetry=float(np.max(k_sym_norm)),
        self_adjointness=float(np.max(np.abs(self_adjoint))),
        torsion=torsion,
    )


def conjugate_involution_check(M, p):
    """Max component deviation of (∇*)* from ∇, both duals built from the duality identity"""
    p = M.point(p)
    g = M.g(p)
    dg = M.metric_derivatives(p)
    gamma = koszul(g, dg) + M.k(p)
    dual = dual_connection(gamma, g, dg)
    return float(np.max(np.abs(dual_connection(dual, g, dg) - gamma)))


def lowered_k_symmetry(M, p):
    """Max deviation of g_kl K^l_ij from full symmetry in (i, j, k)"""
    p = M.point(p)
    lowered = np.einsum('kl,lij->ijk', M.g(p), M.k(p))
    return max(float(np.max(np.abs(lowered - np.transpose(lowered, perm)))) for perm in permutations(range(3)))


def averaged_connection_residual(M, p):
    """|(Γ + Γ*)/2 - Γ^g|, zero up to rounding by construction"""
    gamma, gamma_star = dual_christoffels(M, p)
    return float(np.max(np.abs(0.5 * (gamma + gamma_star) - levi_civita_christoffels(M, p))))


def random_spd(rng, dim, spread=1.0):
    """Well-conditioned random symmetric positive definite matrix"""
    a = rng.standard_normal((dim, dim)) * spread
    return a @ a.T + dim * np.eye(dim)


def random_admissible_k(rng, g, scale=1.0):
    """Raises one index of a random fully symmetric 3-array with g^-1"""
    dim = g.shape[0]
    c = rng.standard_normal((dim, dim, dim)) * scale
    symmetric = sum(np.transpose(c, perm) for perm in permutations(range(3))) / 6.0
    return np.einsum('kl,ijl->kij', np.linalg.inv(g), symmetric)
