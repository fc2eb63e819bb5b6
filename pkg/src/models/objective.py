"""
Objective evaluation and solution checks for the cell formation model.

Exceptions are weighted ones whose machine and part sit in different cells, voids are
weighted zeros whose machine and part share a cell. f1 = e + v, and the grouping
efficacy f2 = (n1 − e)/(n1 + v) is kept as an exact fraction.
"""

import numpy as np

from src.entity.cfp_entity import CfpInstance, CfpSolution, ObjectiveReport, Violation
from src.utils.exception import CellIndexError, DimensionMismatchError


def _check_shape(instance: CfpInstance, solution: CfpSolution) -> None:
    if len(solution.machine_cell) != instance.m or len(solution.part_cell) != instance.p:
        raise DimensionMismatchError(
            f"solution has {len(solution.machine_cell)} machines and {len(solution.part_cell)} "
            f"parts, instance is {instance.m}x{instance.p}"
        )
    bad = [k for k in solution.labels if not 0 <= k < instance.max_cells]
    if bad:
        raise CellIndexError(f"cell index {bad[0]} outside [0, {instance.max_cells})")


def evaluate(instance: CfpInstance, solution: CfpSolution) -> ObjectiveReport:
    """
    Counts weighted exceptions and voids of a solution.

    Args:
        instance (CfpInstance): The (possibly weighted) instance.
        solution (CfpSolution): Cell index per machine and per part.

    Returns:
        ObjectiveReport: n1, e and v; f1 and f2 derive from them.

    Raises:
        DimensionMismatchError: If the solution does not fit the instance shape.
        CellIndexError: If a cell index is not below the cell budget.
    """
    _check_shape(instance, solution)
    same = np.equal.outer(np.array(solution.machine_cell), np.array(solution.part_cell))
    A = instance.matrix.array
    W = instance.weights
    inside_ones = int((W * A)[same].sum())
    voids = int((W * (1 - A))[same].sum())
    return ObjectiveReport(n1=instance.n1, e=instance.n1 - inside_ones, v=voids)


def is_canonical(solution: CfpSolution) -> bool:
    next_label = 0
    for k in solution.labels:
        if k == next_label:
            next_label += 1
        elif k > next_label:
            return False
    return True


def canonicalize(solution: CfpSolution) -> CfpSolution:
    """
    Relabels cells in first-occurrence order over machines, then parts.

    Idempotent, and leaves every objective unchanged.

    Raises:
        CellIndexError: If a label is negative.
    """
    if any(k < 0 for k in solution.labels):
        raise CellIndexError("cell indices must be non-negative")
    relabel: dict[int, int] = {}
    for k in solution.labels:
        relabel.setdefault(k, len(relabel))
    return CfpSolution(
        tuple(relabel[k] for k in solution.machine_cell),
        tuple(relabel[k] for k in solution.part_cell),
    )


def validate(instance: CfpInstance, solution: CfpSolution) -> list[Violation]:
    """
    Lists every broken invariant of a solution; an empty list means valid.

    Checks the machine and part counts, the index range [0, max_cells) and the
    first-occurrence canonical labelling. Violations are data, never raised.
    """
    violations: list[Violation] = []
    for name, cells, expected in (
        ("machines", solution.machine_cell, instance.m),
        ("parts", solution.part_cell, instance.p),
    ):
        if len(cells) != expected:
            violations.append(
                Violation(
                    "dimension mismatch", name, f"{len(cells)} entries, expected {expected}"
                )
            )
        for index, k in enumerate(cells):
            if not 0 <= k < instance.max_cells:
                violations.append(
                    Violation(
                        "index out of range",
                        f"{name}[{index}]",
                        f"cell {k} outside [0, {instance.max_cells})",
                    )
                )
    if not is_canonical(solution):
        violations.append(
            Violation("not canonical", "labels", "cells must appear in first-occurrence order")
        )
    return violations
