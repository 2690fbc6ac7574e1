"""Exception types shared across the package."""

from __future__ import annotations


class GraphInputError(ValueError):
    """Malformed input: bad weight syntax, bad indices, duplicate edges, ..."""


class NotBalancedError(Exception):
    """Some vertex's incoming weight sum differs from its outgoing sum."""

    def __init__(self, vertex, out_sum, in_sum, side=None):
        self.vertex = vertex
        self.out_sum = out_sum
        self.in_sum = in_sum
        self.side = side  # None for digraphs, "x"/"y" for the bipartite check
        where = f"vertex {vertex}" if side is None else f"{side}{vertex}"
        super().__init__(
            f"not balanced at {where}: out = {out_sum}, in = {in_sum}"
        )


class NonIntegerVertexWeightError(Exception):
    """A vertex weight is fractional, so no integer rewrite can exist."""

    def __init__(self, vertex, weight):
        self.vertex = vertex
        self.weight = weight
        super().__init__(f"vertex {vertex} has non-integer weight {weight}")


class NotCompletelyDecimalError(Exception):
    """A cycle handed to the shift step contains an integer-weight edge."""


class InvariantViolationError(Exception):
    """Internal state contradicts a property that balance guarantees."""


class InfeasibleError(Exception):
    """No nonnegative edge weighting realizes the requested vertex weights."""

    def __init__(self, cut_x, cut_y, deficit):
        self.cut_x = list(cut_x)
        self.cut_y = list(cut_y)
        self.deficit = deficit
        super().__init__(
            f"infeasible: vertices {self.cut_x} supply {deficit} more than "
            f"their out-neighborhood {self.cut_y} can absorb"
        )
