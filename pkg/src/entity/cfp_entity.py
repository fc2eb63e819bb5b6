"""
Immutable values of the cell formation model: the machine-part matrix, weighted
instances, cell assignments and their objective report.

Every value is frozen after construction and safe to share between threads.
Numpy views handed out by these classes are read-only.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from src.constants import MAX_MATRIX_ENTRIES, MAX_TOTAL_WEIGHT
from src.utils.exception import DimensionMismatchError, SizeContractError, UndefinedEfficacyError

# Exact rational used for grouping efficacy and decision thresholds.
Rational = Fraction


def _readonly(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


@dataclass(frozen=True)
class BoolMatrix:
    """
    Boolean machine-part matrix; rows are machines, columns are parts.

    Attributes:
        rows (tuple[tuple[int, ...], ...]): The m×p entries a_ij, each 0 or 1.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        for i, row in enumerate(rows):
            if len(row) != width:
                raise DimensionMismatchError(f"row {i} has {len(row)} entries, expected {width}")
            if any(x not in (0, 1) for x in row):
                raise ValueError(f"row {i} contains an entry other than 0/1")
        if len(rows) * width > MAX_MATRIX_ENTRIES:
            raise SizeContractError(
                f"{len(rows)}x{width} matrix exceeds the {MAX_MATRIX_ENTRIES}-entry size contract"
            )
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_array(cls, array: np.ndarray | Sequence[Sequence[int]]) -> "BoolMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in np.asarray(array)))

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def p(self) -> int:
        return len(self.rows[0])

    @cached_property
    def array(self) -> np.ndarray:
        return _readonly(np.array(self.rows, dtype=np.int64))

    def transpose(self) -> "BoolMatrix":
        return BoolMatrix(tuple(zip(*self.rows, strict=True)))


@dataclass(frozen=True)
class CfpInstance:
    """
    Weighted cell formation instance.

    Row and column weights are merge multiplicities: a row of weight w stands for w
    identical machines. `max_cells` is the cell budget c; it defaults to min(m, p)
    and is carried explicitly by merged and extended instances.

    Attributes:
        matrix (BoolMatrix): The machine-part matrix.
        row_weights (tuple[int, ...]): Positive weight per machine (default all 1).
        col_weights (tuple[int, ...]): Positive weight per part (default all 1).
        max_cells (int): Largest number of cells a solution may use.
    """

    matrix: BoolMatrix
    row_weights: tuple[int, ...] = ()
    col_weights: tuple[int, ...] = ()
    max_cells: int = 0

    def __post_init__(self) -> None:
        m, p = self.matrix.m, self.matrix.p
        row_weights = tuple(int(w) for w in self.row_weights) or (1,) * m
        col_weights = tuple(int(u) for u in self.col_weights) or (1,) * p
        if len(row_weights) != m:
            raise DimensionMismatchError(f"{len(row_weights)} row weights for {m} rows")
        if len(col_weights) != p:
            raise DimensionMismatchError(f"{len(col_weights)} column weights for {p} columns")
        if min(row_weights) < 1 or min(col_weights) < 1:
            raise ValueError("all row and column weights must be positive integers")
        total_weight = sum(row_weights) * sum(col_weights)
        if total_weight > MAX_TOTAL_WEIGHT:
            raise SizeContractError(
                f"total weight {total_weight} exceeds the {MAX_TOTAL_WEIGHT} size contract"
            )
        max_cells = int(self.max_cells) or min(m, p)
        if max_cells < 1:
            raise ValueError("max_cells must be at least 1")
        object.__setattr__(self, "row_weights", row_weights)
        object.__setattr__(self, "col_weights", col_weights)
        object.__setattr__(self, "max_cells", max_cells)

    @classmethod
    def from_rows(
        cls,
        rows: Iterable[Iterable[int]],
        row_weights: Iterable[int] = (),
        col_weights: Iterable[int] = (),
        max_cells: int = 0,
    ) -> "CfpInstance":
        return cls(
            BoolMatrix(tuple(tuple(r) for r in rows)),
            tuple(row_weights),
            tuple(col_weights),
            max_cells,
        )

    @property
    def m(self) -> int:
        return self.matrix.m

    @property
    def p(self) -> int:
        return self.matrix.p

    @property
    def is_unweighted(self) -> bool:
        return all(w == 1 for w in self.row_weights) and all(u == 1 for u in self.col_weights)

    @cached_property
    def weights(self) -> np.ndarray:
        """Entry weights w_i·u_j as an m×p read-only array."""
        return _readonly(
            np.outer(
                np.array(self.row_weights, dtype=np.int64),
                np.array(self.col_weights, dtype=np.int64),
            )
        )

    @cached_property
    def n1(self) -> int:
        """Weighted number of ones."""
        return int((self.weights * self.matrix.array).sum())

    @property
    def total_weight(self) -> int:
        return sum(self.row_weights) * sum(self.col_weights)

    def transpose(self) -> "CfpInstance":
        return CfpInstance(
            self.matrix.transpose(), self.col_weights, self.row_weights, self.max_cells
        )


@dataclass(frozen=True)
class CfpSolution:
    """
    Cell index per machine and per part (the x_ik and y_jk assignments).

    Cells may hold only machines or only parts; indices need not be canonical
    until `canonicalize` is applied.
    """

    machine_cell: tuple[int, ...]
    part_cell: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "machine_cell", tuple(int(k) for k in self.machine_cell))
        object.__setattr__(self, "part_cell", tuple(int(k) for k in self.part_cell))

    @property
    def labels(self) -> tuple[int, ...]:
        """Machines-then-parts label string; its order defines canonical form."""
        return self.machine_cell + self.part_cell

    @property
    def num_cells(self) -> int:
        return len(set(self.labels))

    def transpose(self) -> "CfpSolution":
        return CfpSolution(self.part_cell, self.machine_cell)


@dataclass(frozen=True)
class ObjectiveReport:
    """
    Weighted counts of an (instance, solution) pair.

    Attributes:
        n1 (int): Weighted ones of the instance.
        e (int): Weighted exceptions, ones outside every cell.
        v (int): Weighted voids, zeros inside a cell.
    """

    n1: int
    e: int
    v: int

    @property
    def f1(self) -> int:
        return self.e + self.v

    @property
    def has_efficacy(self) -> bool:
        return self.n1 + self.v > 0

    @property
    def f2(self) -> Rational:
        """Grouping efficacy (n1 − e)/(n1 + v), exact."""
        if not self.has_efficacy:
            raise UndefinedEfficacyError("grouping efficacy is undefined when n1 = 0 and v = 0")
        return Fraction(self.n1 - self.e, self.n1 + self.v)


@dataclass(frozen=True)
class Violation:
    """One broken solution invariant, reported as data by `validate`."""

    kind: str
    location: str
    message: str = field(default="")

    def __str__(self) -> str:
        text = f"{self.kind} at {self.location}"
        return f"{text}: {self.message}" if self.message else text
