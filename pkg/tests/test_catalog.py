import numpy as np
import pytest
from numpy.testing import assert_allclose

from kenstat import catalog
from kenstat.commands.list import format_entry, list_catalog
from kenstat.exceptions import CatalogMissError, ConfigError
from kenstat.kenmotsu import KenmotsuStatisticalManifold
from kenstat.submanifold import Immersion


def test_catalog_order():
    names = [entry.name for entry in catalog.catalog()]
    assert names == [
        'euclidean', 'example_3_4', 'example_3_4_literal', 'hyperbolic_kenmotsu', 'round_sphere_test',
        'fiber_slice', 'xalpha_plane', 'tilted_plane', 'graph_perturbation', 'invariant_slice',
        'example_fiber_slice', 'euclidean_plane', 'linear',
    ]


def test_build_with_defaults_and_params():
    M = catalog.build('hyperbolic_kenmotsu', s=2)
    assert isinstance(M, KenmotsuStatisticalManifold)
    assert M.dim == 5
    assert M.c_bar == -1.0
    assert isinstance(catalog.build('fiber_slice'), Immersion)


def test_unknown_name():
    with pytest.raises(CatalogMissError):
        catalog.build('nonexistent')
    with pytest.raises(CatalogMissError):
        catalog.build_immersion('euclidean')


def test_unknown_parameter():
    with pytest.raises(ConfigError):
        catalog.build_manifold('example_3_4', gamma=2.0)


def test_example_difference_tensor_table():
    k = catalog.example_ktensor(2.0)
    assert k[0, 0, 0] == -2.0
    assert k[1, 0, 1] == k[1, 1, 0] == 2.0
    assert k[0, 1, 1] == 2.0
    assert k[1, 0, 0] == k[0, 0, 1] == k[1, 1, 1] == 0.0


def test_literal_example_has_flat_fiber():
    M = catalog.build('example_3_4_literal')
    assert_allclose(M.base.g([2.0, 0.0, 0.5]), np.diag([np.e, np.e, 1.0]))
    assert_allclose(M.phi([1.0, 0.0, 0.0]) @ [1.0, 0.0, 0.0], [0.0, -1.0, 0.0])


@pytest.mark.parametrize('name', ['example_3_4', 'example_3_4_literal'])
def test_examples_use_the_printed_phi(name):
    M = catalog.build(name)
    p = [1.5, 0.0, 0.2]
    assert_allclose(M.phi(p) @ [1.0, 0.0, 0.0], [0.0, -1.0, 0.0])
    assert_allclose(M.phi(p) @ [0.0, 1.0, 0.0], [1.0, 0.0, 0.0])


def test_dimensions():
    assert catalog.dimension_of(catalog.MANIFOLDS['example_3_4']) == '3'
    assert catalog.dimension_of(catalog.IMMERSIONS['tilted_plane']) == '3 in 5'
    assert catalog.dimension_of(catalog.IMMERSIONS['linear']) == 'any'


def test_linear_immersion():
    imm = catalog.build_immersion('linear', ambient='hyperbolic_kenmotsu', basis=[[1, 0, 0], [0, 0, 1]])
    assert imm.src_dim == 2
    assert_allclose(imm([0.5, 0.25]), [0.5, 0.0, 0.25])
    with pytest.raises(ConfigError):
        catalog.build_immersion('linear', basis=[[1.0, 0.0]])
    with pytest.raises(ConfigError):
        catalog.build_immersion('linear')


def test_list_shows_anchors():
    text = list_catalog()
    assert 'example_3_4 — Example 3.4' in text
    assert 'hyperbolic_kenmotsu — c̄ = −1 model' in text
    assert '\x1b[' not in text


def test_format_entry_kind_and_params():
    line = format_entry(catalog.IMMERSIONS['graph_perturbation'])
    assert line.splitlines()[1] == '    immersion, dim 2 in 3; params: a=0.3'
    line = format_entry(catalog.IMMERSIONS['xalpha_plane'])
    assert 'params: -' in line
