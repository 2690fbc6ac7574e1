"""Elimination of fractional edge weights on balanced digraphs.

Core loop: while some edge weight is fractional, find a cycle in the
bipartite lift all of whose edges are fractional, subtract the smallest
fractional part from alternate edges and add it to the others.  Balance
and nonnegativity are preserved at every step, at least one edge becomes
integer and none becomes fractional, so the loop retires the fractional
edges in at most |E| rounds.

Such a cycle always exists while fractional edges remain (given integer
vertex weights): a vertex incident to one fractional edge is incident to
at least two, so a walk that never reuses its arrival edge must close.

Cycle selection is deterministic so outputs are reproducible: the walk
starts at the lowest-indexed X-vertex touching a fractional edge and
always leaves along the lowest-indexed fractional edge other than the one
it arrived on.  Any selection policy yields a correct result; only the
particular integer certificate depends on it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .bipartite import BipartiteGraph, DecimalCycle, lift
from .digraph import WeightedDigraph, check_balanced
from .errors import (
    InvariantViolationError,
    NonIntegerVertexWeightError,
    NotCompletelyDecimalError,
)
from .rational import decimal_part, is_decimal


class DecimalStatus(enum.Enum):
    NO_DECIMAL_EDGE = "no-decimal-edge"
    HAS_COMPLETELY_DECIMAL_CYCLE = "has-completely-decimal-cycle"


@dataclass(frozen=True)
class IntegerizeStep:
    cycle_length: int
    epsilon: Fraction
    decimal_edges_eliminated: int
    decimal_edges_remaining: int


@dataclass(frozen=True)
class IntegerizeReport:
    """Termination witness: how many rounds, and what each one retired."""

    initial_decimal_edges: int
    steps: tuple[IntegerizeStep, ...]

    @property
    def iterations(self) -> int:
        return len(self.steps)


def count_decimal_edges(w: Sequence[Fraction]) -> int:
    return sum(1 for x in w if is_decimal(x))


def find_completely_decimal_cycle(
    b: BipartiteGraph, w: Sequence[Fraction]
) -> Optional[DecimalCycle]:
    """Deterministic walk to an all-fractional cycle, or None if w is integral.

    Raises InvariantViolationError when the walk strands at a vertex with
    exactly one incident fractional edge; under balance with integer
    vertex weights that cannot happen, so it signals corrupted state.
    """
    decimal = [is_decimal(x) for x in w]
    start = None
    for i in range(b.n):
        if any(decimal[k] for k in b.x_edges[i]):
            start = (0, i)
            break
    if start is None:
        return None

    # Walk x, y, x, ... never reusing the arrival edge; vertices before the
    # first repeat are distinct, so no edge repeats either.
    seen = {start: 0}
    path_edges: list[int] = []
    vertex = start
    arrival = -1
    while True:
        side, i = vertex
        incident = b.x_edges[i] if side == 0 else b.y_edges[i]
        step = None
        for k in incident:
            if decimal[k] and k != arrival:
                step = k
                break
        if step is None:
            raise InvariantViolationError(
                f"vertex {'xy'[side]}{i} has a single incident decimal edge"
            )
        if side == 0:
            nxt = (1, b.edges[step][1])
        else:
            nxt = (0, b.edges[step][0])
        path_edges.append(step)
        if nxt in seen:
            cycle = path_edges[seen[nxt] :]
            if nxt[0] == 1:  # closed at a Y-vertex: rotate to start at X
                cycle = cycle[1:] + cycle[:1]
            return DecimalCycle(cycle)
        seen[nxt] = len(seen)
        vertex = nxt
        arrival = step


def cycle_epsilon(w: Sequence[Fraction], cycle: DecimalCycle) -> Fraction:
    """Smallest fractional part among the cycle's edge weights."""
    return min(decimal_part(w[k]) for k in cycle.edges)


def cycle_shift(
    w: Sequence[Fraction], cycle: DecimalCycle
) -> tuple[Fraction, ...]:
    """Shift epsilon around the cycle: minus on one parity class, plus on the other.

    The class containing the first edge of minimal fractional part takes
    the minus sign (traversing the cycle in the other direction would swap
    the roles, so both orientations are covered by this choice).  That
    edge's weight becomes integer; no weight turns negative because every
    shifted-down weight has fractional part >= epsilon.
    """
    parts = [decimal_part(w[k]) for k in cycle.edges]
    for k, p in zip(cycle.edges, parts):
        if p == 0:
            raise NotCompletelyDecimalError(
                f"edge {k} has integer weight {w[k]}"
            )
    eps = min(parts)
    minus_parity = parts.index(eps) % 2
    out = list(w)
    for pos, k in enumerate(cycle.edges):
        if pos % 2 == minus_parity:
            out[k] = out[k] - eps
        else:
            out[k] = out[k] + eps
    return tuple(out)


def classify(
    b: BipartiteGraph, w: Sequence[Fraction], u: Sequence[Fraction]
) -> DecimalStatus:
    """Which side of the dichotomy holds: integral w, or a decimal cycle.

    With balance and integer vertex weights there is no third case; a
    fractional edge without a completely decimal cycle raises
    InvariantViolationError.
    """
    has_decimal = any(is_decimal(x) for x in w)
    cycle = find_completely_decimal_cycle(b, w)
    if not has_decimal:
        return DecimalStatus.NO_DECIMAL_EDGE
    if cycle is None:
        raise InvariantViolationError(
            "decimal edge present but no completely decimal cycle found"
        )
    return DecimalStatus.HAS_COMPLETELY_DECIMAL_CYCLE


def integerize(
    g: WeightedDigraph, verify: bool = False
) -> tuple[tuple[Fraction, ...], IntegerizeReport]:
    """Rewrite g's weights to nonnegative integers with the same vertex sums.

    Requires g balanced with integer vertex weights; raises
    NotBalancedError or NonIntegerVertexWeightError otherwise.  With
    verify=True, balance preservation, nonnegativity and strict progress
    are re-checked after every shift (exact comparisons).
    """
    u = check_balanced(g)
    for i, ui in enumerate(u):
        if ui.denominator != 1:
            raise NonIntegerVertexWeightError(i, ui)

    b = lift(g.graph)
    w = g.weights
    remaining = count_decimal_edges(w)
    initial = remaining
    steps: list[IntegerizeStep] = []
    while True:
        cycle = find_completely_decimal_cycle(b, w)
        if cycle is None:
            break
        eps = cycle_epsilon(w, cycle)
        new_w = cycle_shift(w, cycle)
        now = count_decimal_edges(new_w)
        if verify:
            if min(new_w) < 0:
                raise InvariantViolationError("negative weight after shift")
            if now >= remaining:
                raise InvariantViolationError("decimal-edge count did not drop")
            if check_balanced(g.replace_weights(new_w)) != u:
                raise InvariantViolationError("vertex weights changed")
        steps.append(
            IntegerizeStep(
                cycle_length=len(cycle),
                epsilon=eps,
                decimal_edges_eliminated=remaining - now,
                decimal_edges_remaining=now,
            )
        )
        w = new_w
        remaining = now
    return w, IntegerizeReport(initial_decimal_edges=initial, steps=tuple(steps))
