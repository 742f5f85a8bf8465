# -*- coding: utf-8 -*-
"""
Suite configuration

Precedence, lowest first: built-in defaults, the tolerance file named by
KENSTAT_TOLERANCES, a JSON config file, command-line flags.
"""

from __future__ import absolute_import

import ast
import json
import logging
import os
from dataclasses import dataclass, field
from typing import Dict, Optional

from kenstat.catalog import IMMERSIONS, MANIFOLDS
from kenstat.exceptions import ConfigError


logger = logging.getLogger(__name__)


TOLERANCE_ENV = 'KENSTAT_TOLERANCES'

DEFAULT_TOLERANCES = {
    'algebra': 1e-9,
    'fd1': 1e-6,
    'fd2': 1e-5,
    'fd3': 1e-4,
    'inequality': 1e-5,
    'equality': 1e-6,
}

SUITES = ('axioms', 'curvature', 'submanifold', 'chen_ricci', 'all')
FORMATS = ('text', 'json')


@dataclass(frozen=True)
class SuiteConfig:
    suite: str = 'all'
    manifold: Optional[str] = None
    manifold_params: Dict = field(default_factory=dict)
    immersion: Optional[str] = None
    immersion_params: Dict = field(default_factory=dict)
    points: int = 5
    directions: int = 2
    seed: int = 0
    tolerances: Dict = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))
    output: Optional[str] = None
    format: str = 'text'
    jobs: int = 1

    def tolerance(self, tier):
        return self.tolerances[tier]

    def echo(self):
        """JSON-ready copy of the configuration"""
        return {
            'suite': self.suite,
            'manifold': self.manifold,
            'manifold_params': dict(self.manifold_params),
            'immersion': self.immersion,
            'immersion_params': dict(self.immersion_params),
            'points': self.points,
            'directions': self.directions,
            'seed': self.seed,
            'tolerances': dict(sorted(self.tolerances.items())),
            'format': self.format,
        }


def parse_reference(text, field_name):
    """
    Splits a catalog reference into its name and keyword parameters

    Accepts `name`, `name(1, 2)` and `name(lam=1, beta=2)`; positional values
    are matched against the entry's parameters in declaration order.
    """
    text = text.strip()
    try:
        node = ast.parse(text, mode='eval').body
    except SyntaxError:
        raise ConfigError('cannot parse catalog reference {!r}'.format(text), field=field_name)
    if isinstance(node, ast.Name):
        return node.id, {}, ()
    if not isinstance(node, ast.Call) or not isinstance(node.func, ast.Name):
        raise ConfigError('expected name or name(...), got {!r}'.format(text), field=field_name)
    try:
        args = tuple(ast.literal_eval(arg) for arg in node.args)
        kwargs = {kw.arg: ast.literal_eval(kw.value) for kw in node.keywords}
    except ValueError:
        raise ConfigError('parameters of {!r} must be literals'.format(text), field=field_name)
    return node.func.id, kwargs, args


def _resolve(registry, text, params, field_name):
    name, kwargs, args = parse_reference(text, field_name)
    if name not in registry:
        raise ConfigError('unknown catalog name {!r}; known: {}'.format(name, ', '.join(registry)), field=field_name)
    order = list(registry[name].defaults)
    if len(args) > len(order):
        raise ConfigError('{} takes at most {} parameters'.format(name, len(order)), field=field_name)
    merged = dict(zip(order, args))
    merged.update(kwargs)
    merged.update(params or {})
    unknown = sorted(set(merged) - set(order))
    if unknown:
        raise ConfigError('{} takes no parameter {}'.format(name, ', '.join(unknown)), field=field_name)
    return name, merged


def _read_json(path, what):
    try:
        with open(path, 'r') as handle:
            return json.load(handle)
    except json.JSONDecodeError as err:
        raise ConfigError('{} {} is not valid JSON: {}'.format(what, path, err.msg), line=err.lineno)
    except OSError as err:
        raise ConfigError('cannot read {} {}: {}'.format(what, path, err.strerror))


def _tolerance_map(raw, field_name):
    if not isinstance(raw, dict):
        raise ConfigError('tolerances must be an object of tier: value', field=field_name)
    tiers = {}
    for tier, value in raw.items():
        if tier not in DEFAULT_TOLERANCES:
            raise ConfigError('unknown tolerance tier {!r}'.format(tier), field=field_name)
        try:
            tiers[tier] = float(value)
        except (TypeError, ValueError):
            raise ConfigError('tolerance {} must be a number'.format(tier), field=field_name)
        if tiers[tier] <= 0.0:
            raise ConfigError('tolerance {} must be positive'.format(tier), field=field_name)
    return tiers


def environment_tolerances(environ=None):
    """Tiers from the JSON file named by KENSTAT_TOLERANCES, if set"""
    environ = os.environ if environ is None else environ
    path = environ.get(TOLERANCE_ENV)
    if not path:
        return {}
    logger.info('reading tolerance tiers from %s', path)
    return _tolerance_map(_read_json(path, 'tolerance file'), TOLERANCE_ENV)


def parse_tier(text):
    """`tier=value` from the command line"""
    tier, sep, value = text.partition('=')
    if not sep:
        raise ConfigError('expected tier=value, got {!r}'.format(text), field='tol-tier')
    return _tolerance_map({tier.strip(): value.strip()}, 'tol-tier')


KNOWN_KEYS = (
    'suite', 'manifold', 'manifold_params', 'immersion', 'immersion_params', 'points', 'directions',
    'seed', 'tolerances', 'output', 'format', 'jobs',
)


def _integer(value, field_name, minimum):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError('{} must be an integer'.format(field_name), field=field_name)
    if value < minimum:
        raise ConfigError('{} must be at least {}'.format(field_name, minimum), field=field_name)
    return value


def build_config(overrides, environ=None):
    """
    Validates a dict of settings on top of the defaults and the environment

    Raises:
        ConfigError: unknown key, bad value or unknown catalog name
    """
    unknown = sorted(set(overrides) - set(KNOWN_KEYS))
    if unknown:
        raise ConfigError('unknown setting {}'.format(', '.join(unknown)), field=unknown[0])

    tolerances = dict(DEFAULT_TOLERANCES)
    tolerances.update(environment_tolerances(environ))
    tolerances.update(_tolerance_map(overrides.get('tolerances', {}), 'tolerances'))

    suite = overrides.get('suite', 'all')
    if suite not in SUITES:
        raise ConfigError('unknown suite {!r}; choose from {}'.format(suite, ', '.join(SUITES)), field='suite')
    fmt = overrides.get('format', 'text')
    if fmt not in FORMATS:
        raise ConfigError('format must be text or json', field='format')

    manifold, manifold_params = None, {}
    if overrides.get('manifold'):
        manifold, manifold_params = _resolve(
            MANIFOLDS, overrides['manifold'], overrides.get('manifold_params'), 'manifold')
    immersion, immersion_params = None, {}
    if overrides.get('immersion'):
        immersion, immersion_params = _resolve(
            IMMERSIONS, overrides['immersion'], overrides.get('immersion_params'), 'immersion')

    return SuiteConfig(
        suite=suite,
        manifold=manifold,
        manifold_params=manifold_params,
        immersion=immersion,
        immersion_params=immersion_params,
        points=_integer(overrides.get('points', 5), 'points', 1),
        directions=_integer(overrides.get('directions', 2), 'directions', 1),
        seed=_integer(overrides.get('seed', 0), 'seed', 0),
        tolerances=tolerances,
        output=overrides.get('output'),
        format=fmt,
        jobs=_integer(overrides.get('jobs', 1), 'jobs', 1),
    )


def load_config(path=None, flags=None, environ=None):
    """Config file settings overridden by flags; both are optional"""
    settings = {}
    if path is not None:
        raw = _read_json(path, 'config file')
        if not isinstance(raw, dict):
            raise ConfigError('config file {} must hold a JSON object'.format(path))
        settings.update(raw)
    for key, value in (flags or {}).items():
        if key == 'tolerances':
            merged = dict(settings.get('tolerances', {}))
            merged.update(value)
            settings['tolerances'] = merged
        elif value is not None:
            settings[key] = value
    return build_config(settings, environ)
