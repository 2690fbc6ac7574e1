import random
from fractions import Fraction

import pytest

from intbalance import (
    DecimalStatus,
    Digraph,
    NonIntegerVertexWeightError,
    NotBalancedError,
    NotCompletelyDecimalError,
    WeightedDigraph,
    check_balanced,
    classify,
    count_decimal_edges,
    cycle_epsilon,
    cycle_shift,
    find_completely_decimal_cycle,
    integerize,
    is_decimal,
    lift,
)
from intbalance.feasibility import (
    generate_balanced_instance,
    random_strongly_connected_digraph,
)

from oracle import enumerate_completely_decimal_cycles


def test_find_cycle_none_when_integral(triangle_weighted):
    b = lift(triangle_weighted.graph)
    assert find_completely_decimal_cycle(b, triangle_weighted.weights) is None


def test_find_cycle_canonical(canonical):
    b = lift(canonical.graph)
    cycle = find_completely_decimal_cycle(b, canonical.weights)
    # The only cycle of this lift: x0 y0 x1 y1 x0, found by exhaustive
    # enumeration; the deterministic walk must return it (edges 0,3,2,1).
    oracle_cycles = enumerate_completely_decimal_cycles(b, canonical.weights)
    assert len(oracle_cycles) == 1
    assert set(cycle.edges) == set(oracle_cycles[0].edges)
    assert cycle.edges == (0, 3, 2, 1)


def test_find_cycle_bidirected_triangle(bidirected_triangle_half):
    wd = bidirected_triangle_half
    b = lift(wd.graph)
    cycle = find_completely_decimal_cycle(b, wd.weights)
    assert cycle is not None
    assert len(cycle) in (4, 6)
    assert all(is_decimal(wd.weights[k]) for k in cycle.edges)
    cycle.vertex_sequence(b)  # alternation well-formed


def test_cycle_shift_canonical(canonical):
    b = lift(canonical.graph)
    cycle = find_completely_decimal_cycle(b, canonical.weights)
    assert cycle_epsilon(canonical.weights, cycle) == Fraction(1, 2)
    shifted = cycle_shift(canonical.weights, cycle)
    # self-loops (edges 0, 2) drop to 0, cross edges (1, 3) rise to 1
    assert shifted == (Fraction(0), Fraction(1), Fraction(0), Fraction(1))
    assert check_balanced(canonical.replace_weights(shifted)) == (
        Fraction(1),
        Fraction(1),
    )


def test_cycle_shift_quarter_three_quarter(canonical):
    # Same 4-cycle with decimal parts alternating 1/4, 3/4: eps = 1/4
    # retires all four edges at once (1/4 - 1/4 = 0, 3/4 + 1/4 = 1).
    w = (Fraction(1, 4), Fraction(3, 4), Fraction(1, 4), Fraction(3, 4))
    wd = canonical.replace_weights(w)
    assert check_balanced(wd) == (Fraction(1), Fraction(1))
    b = lift(wd.graph)
    cycle = find_completely_decimal_cycle(b, w)
    assert cycle_epsilon(w, cycle) == Fraction(1, 4)
    shifted = cycle_shift(w, cycle)
    assert shifted == (Fraction(0), Fraction(1), Fraction(0), Fraction(1))


def test_cycle_shift_preserves_balance_randomized():
    rng = random.Random(21)
    for seed in range(40):
        n = rng.randint(2, 10)
        g = random_strongly_connected_digraph(n, rng.randint(n, n * n), rng)
        wd = generate_balanced_instance(g, seed)
        b = lift(g)
        u = check_balanced(wd)
        w = wd.weights
        cycle = find_completely_decimal_cycle(b, w)
        if cycle is None:
            continue
        before = count_decimal_edges(w)
        shifted = cycle_shift(w, cycle)
        after_wd = wd.replace_weights(shifted)
        assert check_balanced(after_wd) == u
        assert min(shifted) >= 0
        assert count_decimal_edges(shifted) < before


def test_cycle_shift_rejects_integer_edges(canonical):
    b = lift(canonical.graph)
    cycle = find_completely_decimal_cycle(b, canonical.weights)
    integral = canonical.replace_weights([Fraction(1)] * 4)
    with pytest.raises(NotCompletelyDecimalError):
        cycle_shift(integral.weights, cycle)


def test_integerize_integer_input_is_identity(triangle_weighted):
    w, report = integerize(triangle_weighted)
    assert w == triangle_weighted.weights
    assert report.iterations == 0
    assert report.initial_decimal_edges == 0


def test_integerize_canonical(canonical):
    w, report = integerize(canonical, verify=True)
    assert w == (Fraction(0), Fraction(1), Fraction(0), Fraction(1))
    assert report.iterations == 1
    assert report.initial_decimal_edges == 4
    step = report.steps[0]
    assert step.cycle_length == 4
    assert step.epsilon == Fraction(1, 2)
    assert step.decimal_edges_remaining == 0


def test_integerize_random_instances_verified():
    rng = random.Random(33)
    for seed in range(40):
        n = rng.randint(2, 12)
        g = random_strongly_connected_digraph(n, rng.randint(n, n * n), rng)
        wd = generate_balanced_instance(g, seed, max_denominator=8)
        u = check_balanced(wd)
        w, report = integerize(wd, verify=True)
        assert all(x.denominator == 1 and x >= 0 for x in w)
        assert check_balanced(wd.replace_weights(w)) == u
        assert report.iterations <= report.initial_decimal_edges <= g.m


def test_integerize_rejects_unbalanced(triangle):
    wd = WeightedDigraph(triangle, [1, 1, 2])
    with pytest.raises(NotBalancedError):
        integerize(wd)


def test_integerize_rejects_fractional_vertex_weights(canonical):
    quarter = canonical.replace_weights([Fraction(1, 4)] * 4)
    with pytest.raises(NonIntegerVertexWeightError) as exc_info:
        integerize(quarter)
    assert exc_info.value.vertex == 0
    assert exc_info.value.weight == Fraction(1, 2)


def test_integerize_works_without_strong_connectivity(two_scc_balanced):
    u = check_balanced(two_scc_balanced)
    w, report = integerize(two_scc_balanced, verify=True)
    assert all(x.denominator == 1 for x in w)
    assert check_balanced(two_scc_balanced.replace_weights(w)) == u


def test_classify(canonical, triangle_weighted):
    b = lift(canonical.graph)
    u = check_balanced(canonical)
    assert (
        classify(b, canonical.weights, u)
        == DecimalStatus.HAS_COMPLETELY_DECIMAL_CYCLE
    )
    tb = lift(triangle_weighted.graph)
    tu = check_balanced(triangle_weighted)
    assert classify(tb, triangle_weighted.weights, tu) == DecimalStatus.NO_DECIMAL_EDGE
    w, _ = integerize(canonical)
    assert classify(b, w, u) == DecimalStatus.NO_DECIMAL_EDGE
