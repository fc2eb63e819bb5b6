"""
Unit tests for the correspondence between cell formation and bicluster graph editing.

Usage:
    uv run pytest tests/unit/test_bgep_bridge.py -v
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.entity.cfp_entity import CfpInstance, CfpSolution
from src.entity.graph_entity import BgepInstance, EditSet
from src.models.bgep_bridge import (
    apply_edits,
    bgep_to_cfp,
    cfp_to_bgep,
    edit_set_to_solution,
    is_bicluster_graph,
    solution_to_edit_set,
)
from src.models.objective import canonicalize, evaluate
from src.utils.exception import (
    CellCapacityError,
    DimensionMismatchError,
    InconsistentEditError,
    NotBiclusterError,
    WeightedInstanceError,
)
from tests.strategies import graphs, instances, instances_with_solutions


def test_graph_has_one_edge_per_one(table1: CfpInstance) -> None:
    graph = cfp_to_bgep(table1)
    assert (graph.left, graph.right) == (5, 7)
    assert len(graph.edges) == 21
    assert (0, 0) in graph.edges and (0, 1) not in graph.edges
    assert bgep_to_cfp(graph) == table1


def test_worked_example_edit_set(table1: CfpInstance, table2: CfpSolution) -> None:
    edits = solution_to_edit_set(table1, table2)
    assert len(edits.added) == 2
    assert len(edits.removed) == 10
    assert edits.size == evaluate(table1, table2).f1

    check = is_bicluster_graph(apply_edits(cfp_to_bgep(table1), edits))
    assert check.is_bicluster
    assert (check.bicliques, check.cells_needed) == (3, 3)
    assert edit_set_to_solution(table1, edits) == table2


def test_non_bicluster_reports_missing_edge() -> None:
    graph = BgepInstance(2, 2, frozenset({(0, 0), (0, 1), (1, 1)}))
    check = is_bicluster_graph(graph)
    assert not check.is_bicluster
    assert check.witness == (1, 0)
    with pytest.raises(NotBiclusterError):
        edit_set_to_solution(bgep_to_cfp(graph), EditSet())


def test_isolated_vertices_fill_one_sided_cells() -> None:
    instance = CfpInstance.from_rows([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    check = is_bicluster_graph(cfp_to_bgep(instance))
    assert (check.bicliques, check.cells_needed) == (1, 3)
    solution = edit_set_to_solution(instance, EditSet())
    assert solution == CfpSolution((0, 1, 1), (0, 2, 2))
    assert evaluate(instance, solution).f1 == 0


def test_isolated_vertices_beyond_budget_raise() -> None:
    instance = CfpInstance.from_rows([[1, 0], [0, 0]])
    assert is_bicluster_graph(cfp_to_bgep(instance)).cells_needed == 3
    with pytest.raises(CellCapacityError):
        edit_set_to_solution(instance, EditSet())


def test_inconsistent_edits_raise() -> None:
    graph = BgepInstance(2, 2, frozenset({(0, 0)}))
    with pytest.raises(InconsistentEditError):
        apply_edits(graph, EditSet(added=frozenset({(0, 0)})))
    with pytest.raises(InconsistentEditError):
        apply_edits(graph, EditSet(removed=frozenset({(1, 1)})))
    with pytest.raises(InconsistentEditError):
        EditSet(added=frozenset({(1, 1)}), removed=frozenset({(1, 1)}))


def test_weighted_instances_are_rejected() -> None:
    instance = CfpInstance.from_rows([[1]], row_weights=[2])
    with pytest.raises(WeightedInstanceError):
        cfp_to_bgep(instance)


def test_edit_set_needs_matching_solution(table1: CfpInstance) -> None:
    with pytest.raises(DimensionMismatchError):
        solution_to_edit_set(table1, CfpSolution((0,), (0,) * 7))


@given(instances_with_solutions(max_m=4, max_p=4))
def test_solution_round_trips_through_edits(case) -> None:
    instance, solution = case
    edits = solution_to_edit_set(instance, solution)
    assert edits.size == evaluate(instance, solution).f1
    rebuilt = edit_set_to_solution(instance, edits)
    assert evaluate(instance, rebuilt) == evaluate(instance, solution)
    assert rebuilt == canonicalize(rebuilt)


@given(instances(max_m=4, max_p=5))
def test_instance_round_trips_through_graph(instance: CfpInstance) -> None:
    assert bgep_to_cfp(cfp_to_bgep(instance)) == instance


@given(graphs(max_left=5, max_right=5))
def test_graph_round_trips_through_instance(graph: BgepInstance) -> None:
    instance = bgep_to_cfp(graph)
    assert instance.n1 == len(graph.edges)
    assert cfp_to_bgep(instance) == graph


@given(graphs(max_left=5, max_right=5), st.data())
def test_bicluster_check_ignores_vertex_labels(graph: BgepInstance, data: st.DataObject) -> None:
    left = data.draw(st.permutations(range(graph.left)))
    right = data.draw(st.permutations(range(graph.right)))
    relabeled = BgepInstance(
        graph.left, graph.right, frozenset((left[u], right[v]) for u, v in graph.edges)
    )
    check, moved = is_bicluster_graph(graph), is_bicluster_graph(relabeled)
    assert check.is_bicluster == moved.is_bicluster
    if check.is_bicluster:
        assert (check.bicliques, check.cells_needed) == (moved.bicliques, moved.cells_needed)
    else:
        u, v = moved.witness
        assert (u, v) not in relabeled.edges
