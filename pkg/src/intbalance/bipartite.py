"""Bipartite lift of a digraph.

A digraph G on n vertices lifts to an undirected bipartite graph B on
vertex sets X and Y, each a copy of V: directed edge v_i -> v_j becomes
undirected edge (x_i, y_j).  The lift shares G's edge indexing, so weight
vectors transfer positionally and nothing is stored twice.  Balance of
(G, w) and of (B, w) coincide, with the same vertex weights.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .digraph import Digraph, VertexWeights
from .errors import GraphInputError, InvariantViolationError, NotBalancedError
from .rational import ZERO, is_decimal


class BipartiteGraph:
    """The lift B.  edges[k] == (i, j) means x_i -- y_j, mirroring G."""

    def __init__(self, n: int, edges: Sequence[tuple[int, int]]):
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(edges)
        x_edges: list[list[int]] = [[] for _ in range(n)]
        y_edges: list[list[int]] = [[] for _ in range(n)]
        for k, (i, j) in enumerate(self.edges):
            x_edges[i].append(k)
            y_edges[j].append(k)
        self.x_edges = tuple(tuple(lst) for lst in x_edges)
        self.y_edges = tuple(tuple(lst) for lst in y_edges)

    @property
    def m(self) -> int:
        return len(self.edges)


def lift(g: Digraph) -> BipartiteGraph:
    """Build B from G; edge k of B is (x_i, y_j) iff edge k of G is v_i v_j."""
    return BipartiteGraph(g.n, g.edges)


def check_balanced_bipartite(
    b: BipartiteGraph, w: Sequence[Fraction]
) -> VertexWeights:
    """Vertex weights u with u[i] = sum at x_i = sum at y_i, else raise."""
    if len(w) != b.m:
        raise GraphInputError(f"expected {b.m} weights, got {len(w)}")
    u = []
    for i in range(b.n):
        at_x = sum((w[k] for k in b.x_edges[i]), ZERO)
        at_y = sum((w[k] for k in b.y_edges[i]), ZERO)
        if at_x != at_y:
            raise NotBalancedError(i, at_x, at_y, side="x")
        u.append(at_x)
    return tuple(u)


def decimal_degree(
    b: BipartiteGraph, w: Sequence[Fraction], side: str, i: int
) -> int:
    """Number of non-integer-weight edges incident to x_i or y_i."""
    if side == "x":
        incident = b.x_edges[i]
    elif side == "y":
        incident = b.y_edges[i]
    else:
        raise GraphInputError(f"side must be 'x' or 'y', got {side!r}")
    return sum(1 for k in incident if is_decimal(w[k]))


class DecimalCycle:
    """An even alternating cycle in B, stored as an ordered edge-index list.

    The list starts at an X-vertex: edges at even positions are traversed
    x -> y, edges at odd positions y -> x.  That parity is what the shift
    step needs; which parity class gets the minus sign is decided there.
    """

    def __init__(self, edge_indices: Sequence[int]):
        edges = tuple(edge_indices)
        if len(edges) < 2 or len(edges) % 2 != 0:
            raise InvariantViolationError(
                f"cycle must have even length >= 2, got {len(edges)}"
            )
        if len(set(edges)) != len(edges):
            raise InvariantViolationError("cycle repeats an edge")
        self.edges = edges

    def __len__(self):
        return len(self.edges)

    def vertex_sequence(self, b: BipartiteGraph) -> list[tuple[str, int]]:
        """The alternating vertex walk x, y, x, ..., validated against b.

        Raises InvariantViolationError if consecutive edges do not share
        the alternating endpoint or the walk does not close.
        """
        seq: list[tuple[str, int]] = []
        x = b.edges[self.edges[0]][0]
        for pos, k in enumerate(self.edges):
            i, j = b.edges[k]
            if pos % 2 == 0:  # x -> y
                if i != x:
                    raise InvariantViolationError("broken cycle at x side")
                seq.append(("x", i))
                y = j
            else:  # y -> x
                if j != y:
                    raise InvariantViolationError("broken cycle at y side")
                seq.append(("y", j))
                x = i
        if x != b.edges[self.edges[0]][0]:
            raise InvariantViolationError("cycle does not close")
        return seq

    def __repr__(self):
        return f"DecimalCycle({list(self.edges)})"
