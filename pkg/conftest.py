import pytest

from src.algebra.field import RATIONALS
from src.config import RunConfig
from src.db.cache import resolution_cache
from src.modules.presentation import cyclic_module, free_module, residue_field
from src.modules.rings import polynomial_ring, quotient_ring


@pytest.fixture(autouse=True)
def fresh_resolution_cache():
    """Every test starts from an empty in-memory cache and no cache directory."""
    directory = resolution_cache.directory
    resolution_cache.directory = None
    resolution_cache.clear()
    yield resolution_cache
    resolution_cache.clear()
    resolution_cache.directory = directory


@pytest.fixture
def plane():
    """QQ[x, y]"""
    return polynomial_ring(RATIONALS, ('x', 'y'))


@pytest.fixture
def space():
    """QQ[x, y, z]"""
    return polynomial_ring(RATIONALS, ('x', 'y', 'z'))


@pytest.fixture
def node(plane):
    """QQ[x, y]/(xy): a one-dimensional hypersurface, Gorenstein and not a domain."""
    x, y = plane.gens
    return quotient_ring(plane, [x * y])


@pytest.fixture
def three_lines(space):
    """QQ[x, y, z]/(xy, xz, yz): Cohen-Macaulay of dimension one, not Gorenstein."""
    x, y, z = space.gens
    return quotient_ring(space, [x * y, x * z, y * z])


@pytest.fixture
def node_modules(node):
    """R, k, R/(x) and R/(y) over the node."""
    x, y = node.gens
    return {
        'R': free_module(node, [0]),
        'k': residue_field(node),
        'R/(x)': cyclic_module(node, [x]),
        'R/(y)': cyclic_module(node, [y]),
    }


@pytest.fixture
def config():
    return RunConfig(bound=3)
