# -*- coding: utf-8 -*-
"""
Registry of concrete manifolds and immersions

Every entry is a factory with default parameters, a short anchor naming
the construction it reproduces and a dimension rule. Entries are listed in
registration order.
"""

from __future__ import absolute_import

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict

import numpy as np

from kenstat.exceptions import CatalogMissError, ConfigError
from kenstat.kenmotsu import HolomorphicStatisticalManifold, lift_statistical_structure, manifold_of
from kenstat.statistical import make_manifold
from kenstat.submanifold import Immersion


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    factory: Callable
    anchor: str
    defaults: Dict = field(default_factory=dict)
    description: str = ''

    def build(self, **params):
        unknown = sorted(set(params) - set(self.defaults))
        if unknown:
            raise ConfigError(
                '{} takes no parameter {}'.format(self.name, ', '.join(unknown)),
                field=self.name,
            )
        merged = dict(self.defaults)
        merged.update(params)
        logger.debug('building %s with %s', self.name, merged)
        return self.factory(**merged)


MANIFOLDS = {}
IMMERSIONS = {}


def register(registry, name, anchor, description='', **defaults):
    def decorator(factory):
        registry[name] = CatalogEntry(name, factory, anchor, defaults, description)
        return factory
    return decorator


def standard_j(s):
    """Block matrix sending ∂x_i to ∂y_i for coordinates (x1, y1, x2, y2, ...)"""
    return np.kron(np.eye(s), np.array([[0.0, -1.0], [1.0, 0.0]]))


def flat_fiber(s, J=None):
    """ℂ^s with the Euclidean metric and K = 0"""
    J = standard_j(s) if J is None else J
    base = make_manifold('flat_c{}'.format(s), 2 * s, lambda p: np.eye(2 * s), box=[[-1.0, 1.0]] * (2 * s))
    return HolomorphicStatisticalManifold(base=base, J=lambda p: J)


def example_ktensor(lam):
    """K(∂1,∂1) = -λ∂1, K(∂1,∂2) = K(∂2,∂1) = λ∂2, K(∂2,∂2) = λ∂1"""
    k = np.zeros((2, 2, 2))
    k[0, 0, 0] = -lam
    k[1, 0, 1] = k[1, 1, 0] = lam
    k[0, 1, 1] = lam
    return k


def example_fiber(lam=1.0):
    """Half plane x > 0 with g̃ = x[(dx)² + (dy)²], J∂1 = -∂2 and the constant-component K"""
    k = example_ktensor(lam)
    base = make_manifold(
        'example_fiber',
        2,
        lambda p: p[0] * np.eye(2),
        ktensor=lambda p: k,
        domain=lambda p: p[0] > 0.0,
        box=[[0.5, 2.0], [-1.0, 1.0]],
    )
    return HolomorphicStatisticalManifold(base=base, J=lambda p: -standard_j(1))


@register(MANIFOLDS, 'euclidean', 'flat reference', 'ℝ^n with K = 0', n=3)
def euclidean(n):
    return make_manifold('euclidean', int(n), lambda p: np.eye(int(n)), box=[[-1.0, 1.0]] * int(n))


@register(
    MANIFOLDS, 'example_3_4', 'Example 3.4',
    'lifted half-plane fiber, ḡ = e^{2α} g̃ + dα², φ∂1 = -∂2', lam=1.0, beta=1.0,
)
def example_3_4(lam, beta):
    return lift_statistical_structure(example_fiber(lam), beta=beta, name='example_3_4')


@register(
    MANIFOLDS, 'example_3_4_literal', 'Example 3.4 as printed',
    'flat fiber with the same K, ḡ = e^{2α}[(dx)² + (dy)²] + dα², φ∂1 = -∂2', lam=1.0, beta=1.0,
)
def example_3_4_literal(lam, beta):
    k = example_ktensor(lam)
    base = make_manifold(
        'example_3_4_literal_fiber',
        2,
        lambda p: np.eye(2),
        ktensor=lambda p: k,
        domain=lambda p: p[0] > 0.0,
        box=[[0.5, 2.0], [-1.0, 1.0]],
    )
    fiber = HolomorphicStatisticalManifold(base=base, J=lambda p: -standard_j(1))
    return lift_statistical_structure(fiber, beta=beta, name='example_3_4_literal')


@register(
    MANIFOLDS, 'hyperbolic_kenmotsu', 'c̄ = −1 model',
    'H^{2s+1} as the lift of flat ℂ^s, K̄ = β η⊗η⊗ξ', s=1, beta=0.0,
)
def hyperbolic_kenmotsu(s, beta):
    return lift_statistical_structure(flat_fiber(int(s)), beta=beta, c_bar=-1.0, name='hyperbolic_kenmotsu')


@register(MANIFOLDS, 'round_sphere_test', 'curvature +1 oracle', 'stereographic round metric, K = 0', n=2)
def round_sphere_test(n):
    n = int(n)
    return make_manifold(
        'round_sphere_test',
        n,
        lambda p: 4.0 / (1.0 + float(p @ p)) ** 2 * np.eye(n),
        box=[[-1.0, 1.0]] * n,
    )


def linear_map(origin, basis):
    origin = np.asarray(origin, dtype=float)
    basis = np.asarray(basis, dtype=float)
    return lambda u: origin + np.asarray(u, dtype=float) @ basis


@register(IMMERSIONS, 'fiber_slice', 'α = 0 slice', 'invariant umbilical fiber of hyperbolic_kenmotsu(s)', s=1)
def fiber_slice(s):
    s = int(s)
    ambient = hyperbolic_kenmotsu(s, 0.0)
    return Immersion(
        name='fiber_slice',
        src_dim=2 * s,
        ambient=ambient,
        map=lambda u: np.append(np.asarray(u, dtype=float), 0.0),
        src_box=np.array([[-1.0, 1.0]] * (2 * s)),
    )


@register(IMMERSIONS, 'xalpha_plane', 'y = 0 plane', 'totally geodesic anti-invariant plane of hyperbolic_kenmotsu(1)')
def xalpha_plane():
    return Immersion(
        name='xalpha_plane',
        src_dim=2,
        ambient=hyperbolic_kenmotsu(1, 0.0),
        map=linear_map(np.zeros(3), [[1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]),
        src_box=np.array([[-1.0, 1.0], [-0.5, 0.5]]),
    )


@register(
    IMMERSIONS, 'tilted_plane', 'generic 3-plane',
    'span(∂x1, cos θ ∂y1 + sin θ ∂x2, ξ) in hyperbolic_kenmotsu(2)', theta=0.7,
)
def tilted_plane(theta):
    c, s = np.cos(theta), np.sin(theta)
    basis = [[1.0, 0.0, 0.0, 0.0, 0.0], [0.0, c, s, 0.0, 0.0], [0.0, 0.0, 0.0, 0.0, 1.0]]
    return Immersion(
        name='tilted_plane',
        src_dim=3,
        ambient=hyperbolic_kenmotsu(2, 0.0),
        map=linear_map(np.zeros(5), basis),
        src_box=np.array([[-1.0, 1.0], [-1.0, 1.0], [-0.5, 0.5]]),
    )


@register(IMMERSIONS, 'graph_perturbation', 'α = a x² graph', 'graph over the fiber slice of hyperbolic_kenmotsu(1)', a=0.3)
def graph_perturbation(a):
    a = float(a)
    return Immersion(
        name='graph_perturbation',
        src_dim=2,
        ambient=hyperbolic_kenmotsu(1, 0.0),
        map=lambda u: np.array([u[0], u[1], a * u[0] ** 2]),
        src_box=np.array([[-0.8, 0.8], [-1.0, 1.0]]),
    )


@register(
    IMMERSIONS, 'invariant_slice', 'φ-invariant 3-slice',
    'span(∂x1, ∂y1, ξ) in hyperbolic_kenmotsu(2), totally geodesic with ξ tangent',
)
def invariant_slice():
    basis = [[1.0, 0.0, 0.0, 0.0, 0.0], [0.0, 1.0, 0.0, 0.0, 0.0], [0.0, 0.0, 0.0, 0.0, 1.0]]
    return Immersion(
        name='invariant_slice',
        src_dim=3,
        ambient=hyperbolic_kenmotsu(2, 0.0),
        map=linear_map(np.zeros(5), basis),
        src_box=np.array([[-1.0, 1.0], [-1.0, 1.0], [-0.5, 0.5]]),
    )


@register(IMMERSIONS, 'example_fiber_slice', 'Example 3.4 fiber', 'α = 0 slice of example_3_4', lam=1.0, beta=1.0)
def example_fiber_slice(lam, beta):
    return Immersion(
        name='example_fiber_slice',
        src_dim=2,
        ambient=example_3_4(lam, beta),
        map=lambda u: np.append(np.asarray(u, dtype=float), 0.0),
        src_domain=lambda u: u[0] > 0.0,
        src_box=np.array([[0.5, 2.0], [-1.0, 1.0]]),
    )


@register(IMMERSIONS, 'euclidean_plane', 'flat reference', 'z = 0 plane in euclidean(3)')
def euclidean_plane():
    return Immersion(
        name='euclidean_plane',
        src_dim=2,
        ambient=euclidean(3),
        map=linear_map(np.zeros(3), [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]),
        src_box=np.array([[-1.0, 1.0], [-1.0, 1.0]]),
    )


@register(
    IMMERSIONS, 'linear', 'user-defined', 'origin + u·basis inside any catalog manifold',
    ambient='euclidean', ambient_params=None, origin=None, basis=None, box=None,
)
def linear(ambient, ambient_params, origin, basis, box):
    if basis is None:
        raise ConfigError('linear immersion needs a basis', field='immersion')
    target = build_manifold(ambient, **(ambient_params or {}))
    basis = np.atleast_2d(np.asarray(basis, dtype=float))
    dim = ambient_dim(target)
    if basis.shape[1] != dim:
        raise ConfigError('basis vectors need {} components'.format(dim), field='immersion')
    origin = np.zeros(dim) if origin is None else np.asarray(origin, dtype=float)
    src_box = np.array([[-0.5, 0.5]] * basis.shape[0]) if box is None else np.asarray(box, dtype=float)
    return Immersion(
        name='linear',
        src_dim=basis.shape[0],
        ambient=target,
        map=linear_map(origin, basis),
        src_box=src_box,
    )


def ambient_dim(obj):
    return manifold_of(obj).dim


def _lookup(registry, kind, name):
    try:
        return registry[name]
    except KeyError:
        raise CatalogMissError('unknown {} {!r}; known: {}'.format(kind, name, ', '.join(registry)))


def build_manifold(name, **params):
    return _lookup(MANIFOLDS, 'manifold', name).build(**params)


def build_immersion(name, **params):
    return _lookup(IMMERSIONS, 'immersion', name).build(**params)


def build(name, **params):
    """Builds a manifold or an immersion by catalog name"""
    if name in MANIFOLDS:
        return build_manifold(name, **params)
    if name in IMMERSIONS:
        return build_immersion(name, **params)
    raise CatalogMissError('unknown catalog name {!r}'.format(name))


def catalog():
    """All entries, manifolds first, in registration order"""
    return list(MANIFOLDS.values()) + list(IMMERSIONS.values())


def dimension_of(entry):
    """Dimension of an entry built with its defaults, "any" when it needs parameters"""
    try:
        built = entry.build()
    except ConfigError:
        return 'any'
    if isinstance(built, Immersion):
        return '{} in {}'.format(built.src_dim, built.dim)
    return str(built.dim)
