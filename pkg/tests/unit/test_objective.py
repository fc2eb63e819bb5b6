"""
Unit tests for objective evaluation, canonical labelling and solution validation.

Usage:
    uv run pytest tests/unit/test_objective.py -v
"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.constants import MAX_TOTAL_WEIGHT
from src.entity.cfp_entity import BoolMatrix, CfpInstance, CfpSolution, ObjectiveReport
from src.models.objective import canonicalize, evaluate, is_canonical, validate
from src.utils.exception import (
    CellIndexError,
    DimensionMismatchError,
    SizeContractError,
    UndefinedEfficacyError,
)
from tests.strategies import instances_with_solutions

# --- Worked example ---


def test_worked_example_counts(table1: CfpInstance, table2: CfpSolution) -> None:
    report = evaluate(table1, table2)
    assert (report.n1, report.e, report.v) == (21, 10, 2)
    assert report.f1 == 12
    assert report.f2 == Fraction(11, 23)


def test_single_cell_of_one_entry() -> None:
    instance = CfpInstance.from_rows([[1]])
    report = evaluate(instance, CfpSolution((0,), (0,)))
    assert report == ObjectiveReport(n1=1, e=0, v=0)
    assert report.f2 == 1


def test_weighted_entries_count_with_their_weights() -> None:
    instance = CfpInstance.from_rows([[1, 0]], row_weights=[2], col_weights=[1, 3])
    report = evaluate(instance, CfpSolution((0,), (0, 0)))
    assert (report.n1, report.e, report.v) == (2, 0, 6)
    assert report.f2 == Fraction(1, 4)


def test_efficacy_undefined_without_ones() -> None:
    instance = CfpInstance.from_rows([[0, 0]])
    report = evaluate(instance, CfpSolution((0,), (1, 1)))
    assert report.f1 == 0
    assert not report.has_efficacy
    with pytest.raises(UndefinedEfficacyError):
        _ = report.f2


def test_evaluate_rejects_wrong_shape(table1: CfpInstance) -> None:
    with pytest.raises(DimensionMismatchError):
        evaluate(table1, CfpSolution((0, 0), (0,) * 7))


def test_evaluate_rejects_cell_beyond_budget(table1: CfpInstance) -> None:
    with pytest.raises(CellIndexError):
        evaluate(table1, CfpSolution((0, 0, 0, 0, 5), (0,) * 7))


def test_default_cell_budget_is_smaller_side(table1: CfpInstance) -> None:
    assert table1.max_cells == 5
    assert table1.n1 == 21


def test_matrix_rejects_ragged_rows_and_large_sizes() -> None:
    with pytest.raises(DimensionMismatchError):
        BoolMatrix(((1, 0), (1,)))
    with pytest.raises(ValueError):
        BoolMatrix(((2,),))
    with pytest.raises(SizeContractError):
        BoolMatrix(((0,) * 101,) * 100)


# --- Canonical form ---


def test_canonicalize_relabels_in_first_occurrence_order() -> None:
    result = canonicalize(CfpSolution((2, 2, 0), (0, 2)))
    assert result == CfpSolution((0, 0, 1), (1, 0))
    assert is_canonical(result)


def test_canonicalize_rejects_negative_labels() -> None:
    with pytest.raises(CellIndexError):
        canonicalize(CfpSolution((0, -1), (0,)))


@given(instances_with_solutions(max_m=4, max_p=4, weighted=True))
def test_canonicalize_is_idempotent_and_keeps_objectives(case) -> None:
    instance, solution = case
    once = canonicalize(solution)
    assert canonicalize(once) == once
    assert evaluate(instance, once) == evaluate(instance, solution)


# --- Validation ---


def test_validate_accepts_worked_example(table1: CfpInstance, table2: CfpSolution) -> None:
    assert validate(table1, table2) == []


def test_validate_reports_every_violation() -> None:
    instance = CfpInstance.from_rows([[1, 0], [0, 1]])
    violations = validate(instance, CfpSolution((0, 5), (1,)))
    assert [v.kind for v in violations] == [
        "index out of range",
        "dimension mismatch",
        "not canonical",
    ]
    assert violations[0].location == "machines[1]"
    assert str(violations[1]).startswith("dimension mismatch at parts")


def test_validate_flags_non_canonical_labels() -> None:
    instance = CfpInstance.from_rows([[1, 0], [0, 1]])
    assert [v.kind for v in validate(instance, CfpSolution((1, 0), (1, 0)))] == ["not canonical"]


@given(instances_with_solutions(max_m=3, max_p=4, weighted=True))
def test_exceptions_and_voids_are_bounded(case) -> None:
    instance, solution = case
    report = evaluate(instance, solution)
    assert 0 <= report.e <= report.n1
    assert 0 <= report.v <= instance.total_weight - report.n1


def _recount(instance: CfpInstance, solution: CfpSolution) -> tuple[int, int, int]:
    n1 = e = v = 0
    for i, row in enumerate(instance.matrix.rows):
        for j, a in enumerate(row):
            weight = instance.row_weights[i] * instance.col_weights[j]
            inside = solution.machine_cell[i] == solution.part_cell[j]
            n1 += weight * a
            e += weight * (a and not inside)
            v += weight * (not a and inside)
    return n1, e, v


@given(instances_with_solutions(max_m=4, max_p=4, weighted=True))
def test_evaluate_matches_entrywise_recount(case) -> None:
    instance, solution = case
    report = evaluate(instance, solution)
    assert (report.n1, report.e, report.v) == _recount(instance, solution)


@given(instances_with_solutions(max_m=4, max_p=4, weighted=True))
def test_efficacy_is_one_minus_f1_over_n1_plus_voids(case) -> None:
    instance, solution = case
    report = evaluate(instance, solution)
    if report.has_efficacy:
        assert report.f2 == 1 - Fraction(report.f1, report.n1 + report.v)


@given(instances_with_solutions(max_m=4, max_p=4, weighted=True), st.data())
def test_evaluate_ignores_row_and_column_order(case, data: st.DataObject) -> None:
    instance, solution = case
    rows = data.draw(st.permutations(range(instance.m)))
    cols = data.draw(st.permutations(range(instance.p)))
    shuffled = CfpInstance.from_rows(
        [[instance.matrix.rows[i][j] for j in cols] for i in rows],
        [instance.row_weights[i] for i in rows],
        [instance.col_weights[j] for j in cols],
        instance.max_cells,
    )
    moved = CfpSolution(
        tuple(solution.machine_cell[i] for i in rows),
        tuple(solution.part_cell[j] for j in cols),
    )
    assert evaluate(shuffled, moved) == evaluate(instance, solution)


def test_total_weight_bound() -> None:
    at_bound = CfpInstance.from_rows([[1]], row_weights=[2**15], col_weights=[2**15])
    assert at_bound.total_weight == MAX_TOTAL_WEIGHT
    assert evaluate(at_bound, CfpSolution((0,), (0,))).n1 == 2**30

    with pytest.raises(SizeContractError):
        CfpInstance.from_rows([[1, 1]], row_weights=[2**32], col_weights=[2**32, 1])
    with pytest.raises(SizeContractError):
        CfpInstance.from_rows([[1, 0]], row_weights=[2**15], col_weights=[2**15, 1])
