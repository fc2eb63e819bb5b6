"""
Acceptance suite: minimum f1 equals the minimum bicluster editing distance.

The editing distance is computed independently of every solver, by scanning all
bicluster graphs on the same vertex sets that fit into the cell budget and taking the
smallest symmetric difference with the instance graph. The same suites check the exact
solvers against the oracle.

Usage:
    uv run pytest tests/integration/test_bicluster_equivalence.py -m acceptance -v
"""

import itertools
import operator
from functools import cache, reduce

import numpy as np
import pytest

from src.components.generator import generate
from src.entity.cfp_entity import CfpInstance
from src.entity.config_entity import SolverConfig
from src.entity.solver_entity import Objective
from src.models.bgep_bridge import apply_edits, cfp_to_bgep, is_bicluster_graph, solution_to_edit_set
from src.models.solvers import exact_solve_f1, exact_solve_f2, oracle_solve
from src.utils.logger import get_logger

STAGE_NAME = "Bicluster Equivalence Test"
logger = get_logger(headline=STAGE_NAME)


@cache
def _feasible_targets(m: int, p: int, max_cells: int) -> np.ndarray:
    """
    Bit-packed adjacency of every bicluster graph that fits into `max_cells` cells.

    A graph is a disjoint union of bicliques when the non-empty row supports are pairwise
    equal or disjoint. Isolated machines share one cell, isolated parts another.
    """
    full = (1 << p) - 1
    targets = []
    for supports in itertools.product(range(1 << p), repeat=m):
        nonzero = set(supports) - {0}
        if any(a & b for a, b in itertools.combinations(nonzero, 2)):
            continue
        union = reduce(operator.or_, nonzero, 0)
        cells = len(nonzero) + (0 in supports) + (union != full)
        if cells <= max_cells:
            targets.append(sum(s << (p * i) for i, s in enumerate(supports)))
    return np.array(targets, dtype=np.int64)


def _pack(instance: CfpInstance) -> int:
    return sum(
        a << (instance.p * i + j)
        for i, row in enumerate(instance.matrix.rows)
        for j, a in enumerate(row)
    )


def min_edit_distance(instance: CfpInstance) -> int:
    targets = _feasible_targets(instance.m, instance.p, instance.max_cells)
    return int(np.bitwise_count(targets ^ _pack(instance)).min())


def _all_3x3() -> list[CfpInstance]:
    return [
        CfpInstance.from_rows([[(bits >> (3 * i + j)) & 1 for j in range(3)] for i in range(3)])
        for bits in range(512)
    ]


def _check(instance: CfpInstance) -> None:
    oracle = oracle_solve(instance, Objective.F1)
    assert oracle.report.f1 == min_edit_distance(instance)

    edits = solution_to_edit_set(instance, oracle.best)
    assert edits.size == oracle.report.f1
    assert is_bicluster_graph(apply_edits(cfp_to_bgep(instance), edits)).is_bicluster

    assert exact_solve_f1(instance).report.f1 == oracle.report.f1
    assert exact_solve_f1(instance, SolverConfig(merge_for_f1=False)).report.f1 == oracle.report.f1
    if instance.n1 > 0:
        assert (
            exact_solve_f2(instance).report.f2
            == oracle_solve(instance, Objective.EFFICACY).report.f2
        )


def test_brute_force_distance_on_worked_shapes() -> None:
    assert min_edit_distance(CfpInstance.from_rows([[1, 1], [1, 1]])) == 0
    assert min_edit_distance(CfpInstance.from_rows([[1, 1], [0, 1]])) == 1
    # a 3-cell diagonal does not fit into the 2-cell budget of a 2x3 matrix
    assert min_edit_distance(CfpInstance.from_rows([[1, 0, 0], [0, 1, 0]])) == 1


@pytest.mark.acceptance
def test_every_3x3_matrix() -> None:
    for instance in _all_3x3():
        _check(instance)
    logger.info("All 512 3x3 matrices agree with the editing distance")


@pytest.mark.acceptance
def test_seeded_4x4_instances() -> None:
    for seed in range(100):
        _check(generate(4, 4, "1/2", seed))
    logger.info("100 seeded 4x4 instances agree with the editing distance")


@pytest.mark.acceptance
def test_oracle_on_worked_example(table1: CfpInstance) -> None:
    oracle = oracle_solve(table1, Objective.F1, SolverConfig(oracle_max_dim=7))
    assert oracle.report.f1 == exact_solve_f1(table1).report.f1


@pytest.mark.acceptance
def test_seeded_4x5_instances_match_oracle() -> None:
    for seed in range(200):
        instance = generate(4, 5, "1/2", seed)
        assert exact_solve_f1(instance).report.f1 == oracle_solve(instance, Objective.F1).report.f1
        if instance.n1 > 0:
            assert (
                exact_solve_f2(instance).report.f2
                == oracle_solve(instance, Objective.EFFICACY).report.f2
            )
    logger.info("200 seeded 4x5 instances agree with the oracle")
