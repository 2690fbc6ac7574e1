"""Directed graph structure, balance checking, strong connectivity.

Vertices are dense 0-based indices; external ids are mapped at the I/O
layer.  Self-arcs are allowed, parallel edges are not (the bipartite lift
needs a simple graph).  Graphs are immutable after construction; rebalance
by building a new weight vector.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import GraphInputError, NotBalancedError
from .rational import ZERO, ensure_rational

VertexWeights = tuple[Fraction, ...]


class Digraph:
    """Vertex/edge structure with per-vertex incident-edge index lists."""

    def __init__(self, n: int, edges: Sequence[tuple[int, int]]):
        if n < 0:
            raise GraphInputError("vertex count must be nonnegative")
        seen = set()
        for tail, head in edges:
            if not (0 <= tail < n and 0 <= head < n):
                raise GraphInputError(
                    f"edge ({tail}, {head}) out of range for n = {n}"
                )
            if (tail, head) in seen:
                raise GraphInputError(f"duplicate edge ({tail}, {head})")
            seen.add((tail, head))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(
            (int(t), int(h)) for t, h in edges
        )
        out_edges: list[list[int]] = [[] for _ in range(n)]
        in_edges: list[list[int]] = [[] for _ in range(n)]
        for k, (tail, head) in enumerate(self.edges):
            out_edges[tail].append(k)
            in_edges[head].append(k)
        self.out_edges = tuple(tuple(lst) for lst in out_edges)
        self.in_edges = tuple(tuple(lst) for lst in in_edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self):
        return f"Digraph(n={self.n}, m={self.m})"


class WeightedDigraph:
    """A digraph together with one nonnegative exact weight per edge."""

    def __init__(self, graph: Digraph, weights: Sequence):
        if len(weights) != graph.m:
            raise GraphInputError(
                f"expected {graph.m} weights, got {len(weights)}"
            )
        ws = []
        for k, value in enumerate(weights):
            w = ensure_rational(value)
            if w < 0:
                raise GraphInputError(f"edge {k} has negative weight {w}")
            ws.append(w)
        self.graph = graph
        self.weights: tuple[Fraction, ...] = tuple(ws)

    def replace_weights(self, weights: Sequence) -> "WeightedDigraph":
        return WeightedDigraph(self.graph, weights)

    def __repr__(self):
        return f"WeightedDigraph(n={self.graph.n}, m={self.graph.m})"


def out_sum(g: WeightedDigraph, i: int) -> Fraction:
    """Sum of weights on edges leaving vertex i (self-arcs count once)."""
    return sum((g.weights[k] for k in g.graph.out_edges[i]), ZERO)


def in_sum(g: WeightedDigraph, i: int) -> Fraction:
    """Sum of weights on edges entering vertex i (self-arcs count once)."""
    return sum((g.weights[k] for k in g.graph.in_edges[i]), ZERO)


def check_balanced(g: WeightedDigraph) -> VertexWeights:
    """Return the vertex weight vector u, or raise NotBalancedError.

    u[i] is the common value of in_sum(i) and out_sum(i).  The first
    violating vertex (lowest index) is reported.
    """
    u = []
    for i in range(g.graph.n):
        outgoing = out_sum(g, i)
        incoming = in_sum(g, i)
        if outgoing != incoming:
            raise NotBalancedError(i, outgoing, incoming)
        u.append(outgoing)
    return tuple(u)


def is_integral(u: Sequence[Fraction]) -> bool:
    return all(x.denominator == 1 for x in u)


def strongly_connected_components(g: Digraph) -> list[list[int]]:
    """SCCs in reverse topological order of the condensation (Tarjan).

    Each vertex appears in exactly one component; vertices within a
    component are sorted ascending.
    """
    n = g.n
    index = [-1] * n
    lowlink = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        # Iterative DFS: (vertex, iterator position into its out-edges).
        work = [(root, 0)]
        while work:
            v, pos = work.pop()
            if pos == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            out = g.out_edges[v]
            while pos < len(out):
                w = g.edges[out[pos]][1]
                pos += 1
                if index[w] == -1:
                    work.append((v, pos))
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            if lowlink[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comp.sort()
                components.append(comp)
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
    return components


def is_strongly_connected(g: Digraph) -> bool:
    if g.n < 1:
        raise GraphInputError("strong connectivity needs at least one vertex")
    return len(strongly_connected_components(g)) == 1
