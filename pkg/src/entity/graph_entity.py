"""
Bipartite-graph values for the bicluster graph editing side of the model.
"""

from dataclasses import dataclass, field

from src.utils.exception import DimensionMismatchError, InconsistentEditError

Edge = tuple[int, int]


@dataclass(frozen=True)
class BgepInstance:
    """
    Bipartite graph with machine vertices on the left and part vertices on the right.

    Attributes:
        left (int): Number of left (machine) vertices.
        right (int): Number of right (part) vertices.
        edges (frozenset[Edge]): (left index, right index) pairs.
    """

    left: int
    right: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.left < 1 or self.right < 1:
            raise ValueError("both sides of the graph need at least one vertex")
        edges = frozenset((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if not (0 <= u < self.left and 0 <= v < self.right):
                raise DimensionMismatchError(f"edge ({u}, {v}) is out of range")
        object.__setattr__(self, "edges", edges)


@dataclass(frozen=True)
class EditSet:
    """
    Edges to add (voids) and to remove (exceptions).

    Attributes:
        added (frozenset[Edge]): Edges absent from the graph that must be inserted.
        removed (frozenset[Edge]): Edges of the graph that must be deleted.
    """

    added: frozenset[Edge] = field(default_factory=frozenset)
    removed: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "added", frozenset(self.added))
        object.__setattr__(self, "removed", frozenset(self.removed))
        if self.added & self.removed:
            raise InconsistentEditError("an edge cannot be both added and removed")

    @property
    def size(self) -> int:
        return len(self.added) + len(self.removed)


@dataclass(frozen=True)
class BiclusterCheck:
    """
    Outcome of the bicluster-graph test.

    `bicliques` counts components with at least one edge. Isolated vertices are
    degenerate one-sided components; `cells_needed` adds one cell per side that has
    any. `witness` names a missing edge inside a component when the test fails.
    """

    is_bicluster: bool
    bicliques: int
    cells_needed: int
    witness: Edge | None = None
