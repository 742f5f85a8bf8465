# -*- coding: utf-8 -*-
"""
Chart-level numerical primitives

Points and tangent vectors are float64 numpy arrays in chart coordinates.
Derivatives of smooth coordinate functions are central differences with one
Richardson refinement; frames are orthonormalized with respect to the metric
matrix evaluated at their base point.
"""

from __future__ import absolute_import

import logging
from dataclasses import dataclass

import numpy as np

from kenstat.exceptions import DegenerateFrameError, DomainViolationError


logger = logging.getLogger(__name__)


PIVOT_TOLERANCE = 1e-10


@dataclass(frozen=True)
class StepSizes:
    """Base finite-difference steps, one per nesting depth"""
    first: float = 1e-2
    second: float = 1.25e-2
    third: float = 1.5e-2


DEFAULT_STEPS = StepSizes()


def as_point(coords):
    """Returns the coordinates as a finite float64 vector"""
    point = np.atleast_1d(np.asarray(coords, dtype=float))
    if point.ndim != 1 or not np.all(np.isfinite(point)):
        raise DomainViolationError('chart point must be a finite vector: {}'.format(coords))
    return point


def step_for(x, base):
    """Scales the base step with the magnitude of the coordinate"""
    return base * max(1.0, abs(float(x)))


def _central(field, p, i, h, domain):
    shift = np.zeros_like(p)
    shift[i] = h
    forward, backward = p + shift, p - shift
    if domain is not None and not (domain(forward) and domain(backward)):
        raise DomainViolationError(
            'stencil node leaves the domain: coordinate {} of {} shifted by {:g}'.format(i, p, h)
        )
    return (np.asarray(field(forward), dtype=float) - np.asarray(field(backward), dtype=float)) / (2.0 * h)


def _richardson(field, p, i, base, domain):
    h = step_for(p[i], base)
    return (4.0 * _central(field, p, i, h / 2.0, domain) - _central(field, p, i, h, domain)) / 3.0


def fd_derivative(f, p, i, step=DEFAULT_STEPS.first, domain=None):
    """
    Estimates the partial derivative of a scalar field along coordinate i

    Args:
        f (callable): smooth scalar field on chart points
        p (array-like): chart point
        i (int): coordinate index
        step (float): base step, scaled by max(1, |p_i|)
        domain (callable): optional domain predicate checked on every stencil node

    Returns:
        float: the Richardson-refined central difference, error O(step**4)

    Raises:
        DomainViolationError: a stencil node leaves the domain
    """
    p = as_point(p)
    if domain is not None and not domain(p):
        raise DomainViolationError('point {} is outside the domain'.format(p))
    return float(np.squeeze(_richardson(f, p, i, step, domain)))


def fd_gradient(field, p, step=DEFAULT_STEPS.first, domain=None):
    """Returns all coordinate derivatives of an array-valued field, stacked on a new leading axis"""
    p = as_point(p)
    if domain is not None and not domain(p):
        raise DomainViolationError('point {} is outside the domain'.format(p))
    return np.stack([_richardson(field, p, i, step, domain) for i in range(p.size)])


def fd_hessian(field, p, inner=DEFAULT_STEPS.first, outer=DEFAULT_STEPS.second, domain=None):
    """
    Second derivatives by nested first differences

    The inner and outer steps differ so the two stencils share no nodes.
    The result is symmetrized over its two leading axes.
    """
    nested = fd_gradient(
        lambda q: fd_gradient(field, q, inner, domain),
        p, outer, domain,
    )
    return 0.5 * (nested + np.swapaxes(nested, 0, 1))


@dataclass(frozen=True)
class Frame:
    """Tangent vectors (rows of `vectors`) at a shared base point"""
    base: np.ndarray
    vectors: np.ndarray
    orthonormal: bool = False

    def __len__(self):
        return self.vectors.shape[0]

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, index):
        return self.vectors[index]


def make_frame(base, vectors, orthonormal=False):
    """Builds a frame from a base point and a sequence of component vectors"""
    base = as_point(base)
    vectors = np.atleast_2d(np.asarray(vectors, dtype=float))
    if vectors.shape[1] != base.size:
        raise DegenerateFrameError(
            'frame vectors have {} components at a point of dimension {}'.format(vectors.shape[1], base.size)
        )
    return Frame(base=base, vectors=vectors, orthonormal=orthonormal)


def inner(g, u, v):
    """Metric inner product g(u, v) of component vectors"""
    return float(np.asarray(u) @ g @ np.asarray(v))


def norm(g, u):
    return float(np.sqrt(max(inner(g, u, u), 0.0)))


def frame_residual(frame, g):
    """Largest deviation of the frame Gram matrix from the identity"""
    gram = frame.vectors @ g @ frame.vectors.T
    return float(np.max(np.abs(gram - np.eye(len(frame)))))


def _orthonormalize(vectors, g, tol):
    basis = []
    for index, v in enumerate(vectors):
        scale = norm(g, v)
        w = np.array(v, dtype=float)
        # two passes keep the Gram matrix at rounding level for ill-conditioned metrics
        for _ in range(2):
            for u in basis:
                w = w - inner(g, u, w) * u
        length = norm(g, w)
        if scale == 0.0 or length <= tol * max(scale, 1.0):
            raise DegenerateFrameError(
                'vector {} is dependent on the previous ones (pivot {:.3e})'.format(index, length)
            )
        basis.append(w / length)
    return np.array(basis)


def gram_schmidt(vs, g_at_p, tol=PIVOT_TOLERANCE):
    """
    Orthonormalizes a frame with respect to the metric matrix g_at_p

    The returned frame spans the same subspace and its first vector is a
    positive multiple of the input first vector.

    Raises:
        DegenerateFrameError: a pivot falls below `tol`
    """
    g = np.asarray(g_at_p, dtype=float)
    return Frame(base=vs.base, vectors=_orthonormalize(vs.vectors, g, tol), orthonormal=True)


def extend_frame(vs, g_at_p, seed=0, tol=PIVOT_TOLERANCE):
    """
    Completes an independent set of vectors to a full orthonormal frame

    Random candidates come from a generator seeded with `seed`; candidates
    that fail the pivot test are discarded, so the result is reproducible.
    """
    g = np.asarray(g_at_p, dtype=float)
    dim = g.shape[0]
    basis = list(_orthonormalize(vs.vectors, g, tol)) if len(vs) else []
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    attempts = 0
    while len(basis) < dim:
        attempts += 1
        if attempts > 50 * dim:
            raise DegenerateFrameError('could not complete the frame in dimension {}'.format(dim))
        candidate = rng.standard_normal(dim)
        try:
            basis = list(_orthonormalize(np.array(basis + [candidate]), g, 1e-6))
        except DegenerateFrameError:
            logger.debug('discarded a dependent candidate while completing a frame')
    return Frame(base=vs.base, vectors=np.array(basis), orthonormal=True)


def complete_frame(e1, g_at_p, seed=0, base=None):
    """Full orthonormal frame whose first vector is e1 / ||e1||_g"""
    e1 = np.asarray(e1, dtype=float)
    if base is None:
        base = np.zeros(e1.size)
    return extend_frame(make_frame(base, [e1]), g_at_p, seed)


def symmetry_residual(array, axis1, axis2, sign=1.0):
    """Max deviation of `array` from (anti)symmetry in the two axes"""
    array = np.asarray(array, dtype=float)
    return float(np.max(np.abs(array - sign * np.swapaxes(array, axis1, axis2)), initial=0.0))
