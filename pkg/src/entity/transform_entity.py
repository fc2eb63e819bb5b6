"""
Values produced by the instance transformations: identical-row merging and the
extension with a block of ones.
"""

from dataclasses import dataclass

from src.entity.cfp_entity import CfpInstance


@dataclass(frozen=True)
class MergeMap:
    """
    Groups of identical original rows and columns.

    Group k of `row_groups` is represented by merged row k; its members are listed in
    increasing order and groups are ordered by their first member.

    Attributes:
        row_groups (tuple[tuple[int, ...], ...]): Partition of original row indices.
        col_groups (tuple[tuple[int, ...], ...]): Partition of original column indices.
        m (int): Original row count.
        p (int): Original column count.
        max_cells (int): Cell budget of the original instance.
    """

    row_groups: tuple[tuple[int, ...], ...]
    col_groups: tuple[tuple[int, ...], ...]
    m: int
    p: int
    max_cells: int

    @property
    def is_identity(self) -> bool:
        return len(self.row_groups) == self.m and len(self.col_groups) == self.p


@dataclass(frozen=True)
class ExtendedInstance:
    """
    Instance A padded with an all-ones block on the diagonal.

    Attributes:
        base (CfpInstance): The original unweighted instance A (m×p).
        extended (CfpInstance): Ã of shape (m+mp)×(p+mp); zeros off the diagonal blocks.
        delta_n1 (int): Number of added ones, (mp)².
        block_rows (range): Row indices of the block in Ã.
        block_cols (range): Column indices of the block in Ã.
    """

    base: CfpInstance
    extended: CfpInstance
    delta_n1: int
    block_rows: range
    block_cols: range

    @property
    def n1(self) -> int:
        """ñ1 = n1 + Δn1."""
        return self.base.n1 + self.delta_n1

    @property
    def block_size(self) -> int:
        return len(self.block_rows)
