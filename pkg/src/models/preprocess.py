"""
Identical-row and identical-column merging.

When rows of the machine-part matrix are identical there are optimal solutions that put
them in the same cell, so the search may keep one representative row whose weight is
the sum of the member weights. Columns are merged by the same argument applied to the
transposed instance. The cell budget of the original instance is kept unchanged.
"""

from src.entity.cfp_entity import BoolMatrix, CfpInstance, CfpSolution
from src.entity.transform_entity import MergeMap
from src.utils.exception import DimensionMismatchError
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _group_identical(rows: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    groups: dict[tuple[int, ...], list[int]] = {}
    for index, row in enumerate(rows):
        groups.setdefault(row, []).append(index)
    return tuple(tuple(members) for members in groups.values())


def merge(instance: CfpInstance) -> tuple[CfpInstance, MergeMap]:
    """
    Collapses identical rows, then identical columns, into weighted representatives.

    Returns:
        tuple[CfpInstance, MergeMap]: The merged instance (original `max_cells`) and
        the groups needed to unmerge solutions.
    """
    rows = instance.matrix.rows
    row_groups = _group_identical(rows)
    kept_rows = tuple(rows[g[0]] for g in row_groups)
    row_weights = tuple(sum(instance.row_weights[i] for i in g) for g in row_groups)

    columns = tuple(zip(*kept_rows, strict=True))
    col_groups = _group_identical(columns)
    kept_columns = tuple(columns[g[0]] for g in col_groups)
    col_weights = tuple(sum(instance.col_weights[j] for j in g) for g in col_groups)

    merged = CfpInstance(
        BoolMatrix(tuple(zip(*kept_columns, strict=True))),
        row_weights,
        col_weights,
        instance.max_cells,
    )
    merge_map = MergeMap(row_groups, col_groups, instance.m, instance.p, instance.max_cells)
    if not merge_map.is_identity:
        logger.info(
            f"Merged {instance.m}x{instance.p} instance into {merged.m}x{merged.p} "
            f"weighted representatives"
        )
    return merged, merge_map


def unmerge_solution(solution: CfpSolution, merge_map: MergeMap) -> CfpSolution:
    """
    Gives every original row and column the cell of its representative.

    Raises:
        DimensionMismatchError: If the solution does not match the merged shape.
    """
    if len(solution.machine_cell) != len(merge_map.row_groups) or len(
        solution.part_cell
    ) != len(merge_map.col_groups):
        raise DimensionMismatchError("solution does not match the merged instance shape")
    machine_cell = [0] * merge_map.m
    for k, group in zip(solution.machine_cell, merge_map.row_groups, strict=True):
        for i in group:
            machine_cell[i] = k
    part_cell = [0] * merge_map.p
    for k, group in zip(solution.part_cell, merge_map.col_groups, strict=True):
        for j in group:
            part_cell[j] = k
    return CfpSolution(tuple(machine_cell), tuple(part_cell))
