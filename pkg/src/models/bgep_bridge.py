"""
Correspondence between cell formation and bicluster graph editing.

Machines are left vertices, parts are right vertices and the machine-part matrix is the
biadjacency matrix. An exception is an edge to remove, a void is an edge to add, and a
cell is a biclique of the edited graph.
"""

from itertools import product

import networkx as nx

from src.entity.cfp_entity import BoolMatrix, CfpInstance, CfpSolution
from src.entity.graph_entity import BgepInstance, BiclusterCheck, Edge, EditSet
from src.models.objective import canonicalize, validate
from src.utils.exception import (
    CellCapacityError,
    DimensionMismatchError,
    InconsistentEditError,
    NotBiclusterError,
    WeightedInstanceError,
)


def _require_unweighted(instance: CfpInstance) -> None:
    if not instance.is_unweighted:
        raise WeightedInstanceError(
            "graph conversion needs unit weights; unmerge or expand the weights first"
        )


def cfp_to_bgep(instance: CfpInstance) -> BgepInstance:
    """Bipartite graph whose biadjacency matrix is the machine-part matrix."""
    _require_unweighted(instance)
    edges = frozenset(
        (i, j) for i, row in enumerate(instance.matrix.rows) for j, a in enumerate(row) if a
    )
    return BgepInstance(instance.m, instance.p, edges)


def bgep_to_cfp(graph: BgepInstance) -> CfpInstance:
    """Unweighted instance whose matrix is the biadjacency matrix of the graph."""
    rows = tuple(
        tuple(int((i, j) in graph.edges) for j in range(graph.right)) for i in range(graph.left)
    )
    return CfpInstance(BoolMatrix(rows))


def solution_to_edit_set(instance: CfpInstance, solution: CfpSolution) -> EditSet:
    """
    Edits that turn the instance graph into the bicliques of the solution's cells.

    Raises:
        DimensionMismatchError: If the solution fails `validate` on shape or index range.
    """
    _require_unweighted(instance)
    problems = [v for v in validate(instance, solution) if v.kind != "not canonical"]
    if problems:
        raise DimensionMismatchError(str(problems[0]))
    added: set[Edge] = set()
    removed: set[Edge] = set()
    for i, j in product(range(instance.m), range(instance.p)):
        same_cell = solution.machine_cell[i] == solution.part_cell[j]
        if instance.matrix.rows[i][j] and not same_cell:
            removed.add((i, j))
        elif not instance.matrix.rows[i][j] and same_cell:
            added.add((i, j))
    return EditSet(frozenset(added), frozenset(removed))


def apply_edits(graph: BgepInstance, edits: EditSet) -> BgepInstance:
    """
    Raises:
        InconsistentEditError: If an added edge exists, a removed edge is missing, or an
            edit points outside the graph.
    """
    if edits.added & graph.edges:
        raise InconsistentEditError(f"edge {min(edits.added & graph.edges)} already present")
    if not edits.removed <= graph.edges:
        raise InconsistentEditError(f"edge {min(edits.removed - graph.edges)} is not present")
    try:
        return BgepInstance(graph.left, graph.right, (graph.edges - edits.removed) | edits.added)
    except DimensionMismatchError as e:
        raise InconsistentEditError(str(e))


def _to_networkx(graph: BgepInstance) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from((("m", i) for i in range(graph.left)), bipartite=0)
    g.add_nodes_from((("p", j) for j in range(graph.right)), bipartite=1)
    g.add_edges_from((("m", i), ("p", j)) for i, j in graph.edges)
    return g


def _components(graph: BgepInstance) -> list[tuple[list[int], list[int]]]:
    """Connected components as (left vertices, right vertices), both sorted."""
    components = []
    for nodes in nx.connected_components(_to_networkx(graph)):
        left = sorted(i for side, i in nodes if side == "m")
        right = sorted(j for side, j in nodes if side == "p")
        components.append((left, right))
    return sorted(components, key=lambda c: (c[0][:1] or [graph.left], c[1][:1]))


def is_bicluster_graph(graph: BgepInstance) -> BiclusterCheck:
    """
    Tests whether every connected component is a complete bipartite subgraph.

    Isolated vertices are accepted as degenerate one-sided components. On failure the
    witness is the smallest missing (left, right) pair inside an offending component.
    """
    bicliques = 0
    isolated_left = isolated_right = False
    for left, right in _components(graph):
        if not right:
            isolated_left = True
            continue
        if not left:
            isolated_right = True
            continue
        for i, j in product(left, right):
            if (i, j) not in graph.edges:
                return BiclusterCheck(False, 0, 0, witness=(i, j))
        bicliques += 1
    cells_needed = bicliques + int(isolated_left) + int(isolated_right)
    return BiclusterCheck(True, bicliques, cells_needed)


def edit_set_to_solution(instance: CfpInstance, edits: EditSet) -> CfpSolution:
    """
    Reads a cell assignment off the edited graph: one cell per biclique.

    Isolated machines (parts) become machine-only (part-only) cells. Each takes a fresh
    cell while the budget lasts, after one cell is reserved for the other side; the rest
    join the first one-sided cell of the same side, which changes neither e nor v.

    Raises:
        NotBiclusterError: If the edited graph is not a bicluster graph.
        CellCapacityError: If the bicliques plus one cell per isolated side exceed
            `max_cells`.
    """
    edited = apply_edits(cfp_to_bgep(instance), edits)
    check = is_bicluster_graph(edited)
    if not check.is_bicluster:
        raise NotBiclusterError(f"edited graph misses edge {check.witness}")
    if check.cells_needed > instance.max_cells:
        raise CellCapacityError(
            f"edited graph needs {check.cells_needed} cells, budget is {instance.max_cells}"
        )

    machine_cell = [-1] * instance.m
    part_cell = [-1] * instance.p
    isolated_machines: list[int] = []
    isolated_parts: list[int] = []
    next_cell = 0
    for left, right in _components(edited):
        if not right:
            isolated_machines.extend(left)
        elif not left:
            isolated_parts.extend(right)
        else:
            for i in left:
                machine_cell[i] = next_cell
            for j in right:
                part_cell[j] = next_cell
            next_cell += 1

    spare = instance.max_cells - next_cell
    machine_slots = spare - int(bool(isolated_parts))
    for offset, i in enumerate(sorted(isolated_machines)):
        machine_cell[i] = next_cell + (offset if offset < machine_slots else 0)
    next_cell += min(len(isolated_machines), machine_slots)
    part_slots = instance.max_cells - next_cell
    for offset, j in enumerate(sorted(isolated_parts)):
        part_cell[j] = next_cell + (offset if offset < part_slots else 0)

    return canonicalize(CfpSolution(tuple(machine_cell), tuple(part_cell)))
