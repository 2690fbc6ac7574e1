"""The brute-force verifiers need their own sanity checks."""

from fractions import Fraction

import pytest

from intbalance import Digraph, builtin_graph, integerize, lift
from intbalance.feasibility import canonical_fractional_instance

from oracle import (
    brute_force_integer_solutions,
    enumerate_all_cycles,
    enumerate_completely_decimal_cycles,
)


def test_no_cycles_in_forest_lift():
    b = lift(builtin_graph("cycle3"))  # 3 edges on 6 vertices: a forest
    assert enumerate_all_cycles(b) == []


def test_all_cycles_even_length():
    b = lift(builtin_graph("bidirected-triangle"))
    cycles = enumerate_all_cycles(b)
    assert cycles
    for cyc in cycles:
        assert len(cyc) % 2 == 0
        assert len(cyc) >= 4


def test_decimal_cycles_empty_for_integer_weights():
    wd = canonical_fractional_instance()
    b = lift(wd.graph)
    assert enumerate_completely_decimal_cycles(b, [Fraction(1)] * 4) == []


def test_decimal_cycles_canonical_exactly_one():
    wd = canonical_fractional_instance()
    b = lift(wd.graph)
    cycles = enumerate_completely_decimal_cycles(b, wd.weights)
    assert len(cycles) == 1
    assert set(cycles[0].edges) == {0, 1, 2, 3}
    cycles[0].vertex_sequence(b)  # well-formed alternation


def test_decimal_cycles_all_when_all_edges_decimal(bidirected_triangle_half):
    wd = bidirected_triangle_half
    b = lift(wd.graph)
    assert len(enumerate_completely_decimal_cycles(b, wd.weights)) == len(
        enumerate_all_cycles(b)
    )


def test_brute_force_triangle_unique():
    g = builtin_graph("cycle3")
    assert brute_force_integer_solutions(g, [1, 1, 1], cap=1) == [(1, 1, 1)]


def test_brute_force_zero_u():
    g = builtin_graph("bidirected-triangle")
    assert brute_force_integer_solutions(g, [0, 0, 0], cap=2) == [(0,) * 6]


def test_brute_force_contains_integerize_output():
    wd = canonical_fractional_instance()
    w_star, _ = integerize(wd)
    solutions = brute_force_integer_solutions(wd.graph, [1, 1], cap=1)
    assert tuple(int(x) for x in w_star) in solutions


def test_brute_force_matches_naive_product():
    import itertools

    g = Digraph(2, [(0, 0), (0, 1), (1, 1), (1, 0)])
    u = [2, 2]
    cap = 2
    naive = []
    for w in itertools.product(range(cap + 1), repeat=4):
        ok = all(
            sum(w[k] for k in g.out_edges[i]) == u[i]
            and sum(w[k] for k in g.in_edges[i]) == u[i]
            for i in range(2)
        )
        if ok:
            naive.append(w)
    assert sorted(brute_force_integer_solutions(g, u, cap)) == sorted(naive)


def test_oracle_size_caps():
    big = Digraph(11, [(i, (i + 1) % 11) for i in range(11)])
    with pytest.raises(ValueError):
        brute_force_integer_solutions(big, [1] * 11, cap=1)
    big_b = lift(Digraph(5, [(i, j) for i in range(5) for j in range(4)]))
    with pytest.raises(ValueError):
        enumerate_all_cycles(big_b)
