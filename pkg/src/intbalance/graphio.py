"""Native edge-list file format.

    # optional comments
    n m
    tail head weight     (m lines)

Weights use the exact grammar INT | INT.DIGITS | INT/POSINT and are always
written back as canonical fractions (bare integer when the denominator is
1), so files round-trip bit-exactly.
"""

from __future__ import annotations

import io
from .digraph import Digraph, WeightedDigraph
from .errors import GraphInputError
from .rational import format_weight, parse_weight


def parse_graph(text: str) -> WeightedDigraph:
    header = None
    edges: list[tuple[int, int]] = []
    weights = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise GraphInputError(
                    f"line {lineno}: expected header 'n m', got {line!r}"
                )
            try:
                header = (int(fields[0]), int(fields[1]))
            except ValueError:
                raise GraphInputError(
                    f"line {lineno}: non-integer header {line!r}"
                ) from None
            continue
        if len(fields) != 3:
            raise GraphInputError(
                f"line {lineno}: expected 'tail head weight', got {line!r}"
            )
        try:
            tail, head = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphInputError(
                f"line {lineno}: non-integer vertex index in {line!r}"
            ) from None
        try:
            weight = parse_weight(fields[2])
        except GraphInputError as exc:
            raise GraphInputError(f"line {lineno}: {exc}") from None
        if weight < 0:
            raise GraphInputError(f"line {lineno}: negative weight {fields[2]}")
        edges.append((tail, head))
        weights.append(weight)
    if header is None:
        raise GraphInputError("empty input: missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise GraphInputError(f"header declares {m} edges, found {len(edges)}")
    return WeightedDigraph(Digraph(n, edges), weights)


def format_graph(g: WeightedDigraph) -> str:
    out = io.StringIO()
    out.write(f"{g.graph.n} {g.graph.m}\n")
    for (tail, head), w in zip(g.graph.edges, g.weights):
        out.write(f"{tail} {head} {format_weight(w)}\n")
    return out.getvalue()


def read_graph(path: str) -> WeightedDigraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(path: str, g: WeightedDigraph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g))
