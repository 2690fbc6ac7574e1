from fractions import Fraction

import pytest

from intbalance import Digraph, WeightedDigraph, builtin_graph


@pytest.fixture
def triangle():
    return builtin_graph("cycle3")


@pytest.fixture
def triangle_weighted(triangle):
    return WeightedDigraph(triangle, [2, 2, 2])


@pytest.fixture
def canonical():
    """2-cycle with self-loops, all weights 1/2; u = (1, 1)."""
    from intbalance import canonical_fractional_instance

    return canonical_fractional_instance()


@pytest.fixture
def bidirected_triangle_half():
    """Both triangle orientations, all six weights 1/2; u = (1, 1, 1)."""
    g = builtin_graph("bidirected-triangle")
    return WeightedDigraph(g, [Fraction(1, 2)] * 6)


@pytest.fixture
def two_scc_balanced():
    """Two canonical blocks joined by a zero-weight bridge: weakly connected."""
    half = Fraction(1, 2)
    g = Digraph(
        4,
        [(0, 0), (0, 1), (1, 1), (1, 0), (2, 2), (2, 3), (3, 3), (3, 2), (1, 2)],
    )
    return WeightedDigraph(g, [half] * 8 + [0])
