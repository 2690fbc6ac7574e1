"""Constructing balanced weight vectors and randomized test instances.

Given integer (or rational) vertex weights u, a nonnegative balanced w is
exactly a solution of the transportation problem on the bipartite lift:
supply u_i at x_i, demand u_i at y_i.  An exact-rational max-flow solves
it; with integer u the augmenting amounts are integers, so the direct
solve never produces fractional weights.  Fractional test instances for
the elimination loop therefore come from the generator below, which
injects fractional perturbations around bipartite cycles (a u-preserving
move, the inverse of the elimination step).
"""

from __future__ import annotations

import random
from collections import deque
from fractions import Fraction
from typing import Optional, Sequence

from .bipartite import BipartiteGraph, lift
from .digraph import (
    Digraph,
    VertexWeights,
    WeightedDigraph,
    check_balanced,
    is_integral,
    is_strongly_connected,
)
from .errors import GraphInputError, InfeasibleError, InvariantViolationError
from .rational import ZERO, ensure_rational


class _FlowNetwork:
    """Residual-arc max-flow network over exact rationals (Edmonds-Karp)."""

    def __init__(self, num_vertices: int):
        self.adj: list[list[int]] = [[] for _ in range(num_vertices)]
        self.to: list[int] = []
        self.cap: list[Fraction] = []

    def add_arc(self, a: int, b: int, capacity: Fraction) -> int:
        arc = len(self.to)
        self.adj[a].append(arc)
        self.to.append(b)
        self.cap.append(capacity)
        self.adj[b].append(arc + 1)
        self.to.append(a)
        self.cap.append(ZERO)
        return arc

    def _bfs(self, source: int, sink: int) -> Optional[list[int]]:
        parent_arc = [-1] * len(self.adj)
        parent_arc[source] = -2
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for arc in self.adj[v]:
                w = self.to[arc]
                if parent_arc[w] == -1 and self.cap[arc] > 0:
                    parent_arc[w] = arc
                    if w == sink:
                        arcs = []
                        while w != source:
                            arc = parent_arc[w]
                            arcs.append(arc)
                            w = self.to[arc ^ 1]
                        return arcs
                    queue.append(w)
        return None

    def max_flow(self, source: int, sink: int) -> Fraction:
        total = ZERO
        while True:
            arcs = self._bfs(source, sink)
            if arcs is None:
                return total
            push = min(self.cap[a] for a in arcs)
            for a in arcs:
                self.cap[a] -= push
                self.cap[a ^ 1] += push
            total += push

    def reachable(self, source: int) -> set[int]:
        seen = {source}
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for arc in self.adj[v]:
                w = self.to[arc]
                if w not in seen and self.cap[arc] > 0:
                    seen.add(w)
                    queue.append(w)
        return seen


def solve_feasible_w(g: Digraph, u: Sequence) -> tuple[Fraction, ...]:
    """A nonnegative w realizing vertex weights u, or raise InfeasibleError.

    Works on any digraph (strong connectivity is not needed: the
    transportation constraints encode balance globally, and a balanced w
    is automatically zero on edges between distinct SCCs).  The
    infeasibility witness is the saturated-cut side: the X-vertices whose
    combined supply cannot reach enough demand.
    """
    n = g.n
    weights = [ensure_rational(x) for x in u]
    if len(weights) != n:
        raise GraphInputError(f"expected {n} vertex weights, got {len(weights)}")
    if any(x < 0 for x in weights):
        raise GraphInputError("vertex weights must be nonnegative")

    total = sum(weights, ZERO)
    source, sink = 2 * n, 2 * n + 1
    net = _FlowNetwork(2 * n + 2)
    for i in range(n):
        net.add_arc(source, i, weights[i])
        net.add_arc(n + i, sink, weights[i])
    edge_arcs = [net.add_arc(t, n + h, total) for t, h in g.edges]

    flow = net.max_flow(source, sink)
    if flow != total:
        cut = net.reachable(source)
        cut_x = sorted(i for i in range(n) if i in cut)
        cut_y = sorted(j for j in range(n) if n + j in cut)
        raise InfeasibleError(cut_x, cut_y, total - flow)
    return tuple(total - net.cap[arc] for arc in edge_arcs)


# ---------------------------------------------------------------------------
# Builtin graphs and canonical instances.


def builtin_graph(name: str) -> Digraph:
    """Named graphs for the CLI and tests.

    cycle<N>              directed N-cycle v0 -> v1 -> ... -> v0
    bidirected-triangle   both orientations of the triangle (6 edges)
    two-cycle-loops       2-cycle plus a self-loop at each vertex
    """
    if name.startswith("cycle") and name[5:].isdigit():
        n = int(name[5:])
        if n < 1:
            raise GraphInputError("cycle size must be >= 1")
        return Digraph(n, [(i, (i + 1) % n) for i in range(n)])
    if name in ("bidirected-triangle", "bitriangle"):
        return Digraph(3, [(0, 1), (1, 0), (1, 2), (2, 1), (2, 0), (0, 2)])
    if name == "two-cycle-loops":
        return Digraph(2, [(0, 0), (0, 1), (1, 1), (1, 0)])
    raise GraphInputError(f"unknown builtin graph {name!r}")


def canonical_fractional_instance() -> WeightedDigraph:
    """Two-cycle-with-self-loops, all weights 1/2; u = (1, 1).

    The smallest balanced instance with integer vertex weights and
    fractional edge weights; integerizes in one round to loops 0, cross 1.
    """
    half = Fraction(1, 2)
    return WeightedDigraph(builtin_graph("two-cycle-loops"), [half] * 4)


def random_strongly_connected_digraph(
    n: int, m: int, rng: random.Random, self_loops: bool = True
) -> Digraph:
    """A random digraph with n vertices and m edges, strongly connected.

    A random Hamiltonian cycle guarantees strong connectivity; the
    remaining m - n edges are sampled uniformly without replacement.
    """
    max_m = n * n if self_loops else n * (n - 1)
    if not n <= m <= max_m:
        raise GraphInputError(f"need n <= m <= {max_m}, got n={n}, m={m}")
    order = list(range(n))
    rng.shuffle(order)
    edges = {(order[i], order[(i + 1) % n]) for i in range(n)}
    while len(edges) < m:
        t = rng.randrange(n)
        h = rng.randrange(n)
        if t != h or self_loops:
            edges.add((t, h))
    return Digraph(n, sorted(edges))


# ---------------------------------------------------------------------------
# Balanced-instance generator.


def _shortest_path_edges(g: Digraph, start: int, goal: int) -> list[int]:
    """Edge indices of a BFS shortest path start -> goal (empty if equal)."""
    if start == goal:
        return []
    parent = {start: -1}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for k in g.out_edges[v]:
            h = g.edges[k][1]
            if h not in parent:
                parent[h] = k
                if h == goal:
                    path = []
                    while h != start:
                        k = parent[h]
                        path.append(k)
                        h = g.edges[k][0]
                    path.reverse()
                    return path
                queue.append(h)
    raise InvariantViolationError(f"no path {start} -> {goal} in SC graph")


def _positive_bipartite_cycle(
    b: BipartiteGraph, w: Sequence[Fraction], rng: random.Random
) -> Optional[list[int]]:
    """A cycle of B among edges with weight >= 1, ordered from an X-vertex.

    Returns None when that subgraph is a forest (then no fractional
    perturbation keeps weights nonnegative with headroom 1).
    """
    n = b.n
    adj: list[list[tuple[int, int]]] = [[] for _ in range(2 * n)]
    for k, (i, j) in enumerate(b.edges):
        if w[k] >= 1:
            adj[i].append((k, n + j))
            adj[n + j].append((k, i))
    for lst in adj:
        rng.shuffle(lst)

    color = [0] * (2 * n)  # 0 unseen, 1 on stack, 2 done
    for root in range(2 * n):
        if color[root] or not adj[root]:
            continue
        stack = [(root, -1, iter(adj[root]))]
        color[root] = 1
        parent: dict[int, tuple[int, int]] = {}
        while stack:
            v, arrival, it = stack[-1]
            found = None
            for k, nxt in it:
                if k == arrival:
                    continue
                if color[nxt] == 1:
                    found = (k, nxt)
                    break
                if color[nxt] == 0:
                    color[nxt] = 1
                    parent[nxt] = (k, v)
                    stack.append((nxt, k, iter(adj[nxt])))
                    found = (None, nxt)
                    break
            if found is None:
                color[v] = 2
                stack.pop()
                continue
            k, nxt = found
            if k is None:
                continue
            # Back edge v -> nxt closes a cycle through the stack path.
            cycle = [k]
            node = v
            while node != nxt:
                pk, pv = parent[node]
                cycle.append(pk)
                node = pv
            cycle.reverse()  # now ordered nxt -> ... -> v -> nxt
            if nxt >= n:  # start the list at an X-vertex
                cycle = cycle[1:] + cycle[:1]
            return cycle
    return None


def generate_balanced_instance(
    g: Digraph,
    seed: int,
    max_weight: int = 3,
    max_denominator: int = 4,
    injections: Optional[int] = None,
) -> WeightedDigraph:
    """A random balanced instance with integer vertex weights on g.

    Construction: superpose integer circulations (one directed cycle
    through every edge, via BFS return paths), then perturb: pick a cycle
    in the bipartite lift whose edges all have weight >= 1 and move a
    random q/d back and forth around it.  The perturbation changes no
    vertex sum, so u stays the integer vector of the base circulation,
    while every perturbed edge turns fractional.  All denominators divide
    the single d chosen per instance (2 <= d <= max_denominator).

    Falls back to the purely integer base when the lift has no usable
    cycle (e.g. a single directed cycle, where balance forces equal
    weights).  Deterministic in (seed, parameters).
    """
    if max_weight < 1:
        raise GraphInputError("max_weight must be >= 1")
    if not is_strongly_connected(g):
        raise GraphInputError("generator requires a strongly connected graph")
    rng = random.Random(seed)

    w: list[Fraction] = [ZERO] * g.m
    order = list(range(g.m))
    rng.shuffle(order)
    for k in order:
        tail, head = g.edges[k]
        amount = Fraction(rng.randint(1, max_weight))
        for e in [k] + _shortest_path_edges(g, head, tail):
            w[e] += amount

    if max_denominator >= 2:
        b = lift(g)
        d = rng.randint(2, max_denominator)
        rounds = injections if injections is not None else rng.randint(1, 3)
        for attempt in range(rounds + 1):
            # Injections can cancel (e.g. two 1/2-shifts around the same
            # cycle); when none survived, one extra injection on an
            # all-integer vector is guaranteed to leave decimal edges.
            if attempt == rounds and any(x.denominator != 1 for x in w):
                break
            cycle = _positive_bipartite_cycle(b, w, rng)
            if cycle is None:
                break
            delta = Fraction(rng.randint(1, d - 1), d)
            minus_parity = rng.choice((0, 1))
            for pos, e in enumerate(cycle):
                w[e] += -delta if pos % 2 == minus_parity else delta

    instance = WeightedDigraph(g, w)
    u = check_balanced(instance)
    if not is_integral(u):
        raise InvariantViolationError("generator produced non-integer u")
    return instance


def integer_vertex_weights_from_circulation(
    g: Digraph, seed: int, max_weight: int = 3
) -> VertexWeights:
    """Integer u guaranteed feasible on g: vertex sums of a random circulation."""
    instance = generate_balanced_instance(
        g, seed, max_weight=max_weight, max_denominator=1
    )
    return check_balanced(instance)
