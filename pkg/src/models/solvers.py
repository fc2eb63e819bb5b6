"""
Exact and heuristic optimization of the cell formation objectives.

Three exact procedures share one vectorized scoring core:

1. `oracle_solve` enumerates every canonical joint labelling of machines and parts
   (restricted growth strings over m + p elements) and scores them in numpy batches.
2. `exact_solve_f1` enumerates machine partitions only; given the machine cells every
   part independently picks the cell with the fewest exceptions plus voids. An empty
   cell (one without machines) stands for a part-only cell.
3. `exact_solve_f2` wraps the same per-part decomposition in a Dinkelbach loop over the
   efficacy ratio, with λ kept as an exact fraction.

Partition ranges may be scored on several threads. Candidates are reduced on
(value, enumeration index), so results do not depend on the thread count.
"""

from collections.abc import Callable, Iterable
from fractions import Fraction
from typing import NamedTuple

import numpy as np
from joblib import Parallel, delayed

from src.entity.cfp_entity import CfpInstance, CfpSolution, ObjectiveReport
from src.entity.config_entity import SolverConfig
from src.entity.solver_entity import Decision, DecisionQuery, Method, Objective, SolveResult
from src.entity.transform_entity import MergeMap
from src.models.objective import canonicalize, evaluate
from src.models.partitions import PartitionIterator
from src.models.preprocess import merge, unmerge_solution
from src.utils.exception import GuardViolationError, MalformedQueryError, UndefinedEfficacyError
from src.utils.logger import get_logger

logger = get_logger(__name__)


class _Candidate(NamedTuple):
    """Best labelling of one batch; smaller `key` is better."""

    key: int | Fraction
    index: int
    machine_cell: tuple[int, ...]
    part_cell: tuple[int, ...]


class _Arrays(NamedTuple):
    ones: np.ndarray  # w_i·u_j·a_ij
    zeros: np.ndarray  # w_i·u_j·(1 − a_ij)
    row_weights: np.ndarray
    col_weights: np.ndarray
    col_ones: np.ndarray


def _arrays(instance: CfpInstance) -> _Arrays:
    A = instance.matrix.array
    W = instance.weights
    return _Arrays(
        ones=W * A,
        zeros=W * (1 - A),
        row_weights=np.array(instance.row_weights, dtype=np.int64),
        col_weights=np.array(instance.col_weights, dtype=np.int64),
        col_ones=(W * A).sum(axis=0),
    )


def _cell_sums(
    arrays: _Arrays, machine_labels: np.ndarray, num_cells: int
) -> tuple[np.ndarray, np.ndarray]:
    """
    Weighted ones per (cell, part) and machine weight per cell for a batch of labellings.

    Returns:
        tuple[np.ndarray, np.ndarray]: B×K×p inside-ones and B×K cell weights.
    """
    onehot = (machine_labels[:, :, None] == np.arange(num_cells)).astype(np.int64)
    inside = np.einsum("bmk,mp->bkp", onehot, arrays.ones)
    cell_weight = np.einsum("bmk,m->bk", onehot, arrays.row_weights)
    return inside, cell_weight


def _f1_part_costs(arrays: _Arrays, inside: np.ndarray, cell_weight: np.ndarray) -> np.ndarray:
    # exceptions (ones outside the cell) + voids (zeros inside the cell), per part
    return arrays.col_ones + cell_weight[:, :, None] * arrays.col_weights - 2 * inside


def _parametric_part_scores(
    arrays: _Arrays, inside: np.ndarray, cell_weight: np.ndarray, lam: Fraction
) -> np.ndarray:
    # den·(inside ones) − num·(voids) for λ = num/den; an empty cell scores 0
    num, den = lam.numerator, lam.denominator
    return (den + num) * inside - num * cell_weight[:, :, None] * arrays.col_weights


def _scan(
    batches: Iterable[np.ndarray],
    score: Callable[[int, np.ndarray], _Candidate],
    threads: int,
) -> _Candidate:
    if threads == 1:
        candidates = [score(i, batch) for i, batch in enumerate(batches)]
    else:
        candidates = Parallel(n_jobs=threads, prefer="threads")(
            delayed(score)(i, batch) for i, batch in enumerate(batches)
        )
    return min(candidates, key=lambda c: (c.key, c.index))


def _first_ratio_max(num: np.ndarray, den: np.ndarray) -> int:
    """Index of the first exact maximum of num/den (den > 0)."""
    best = int(np.argmax(num / den))
    better = num * den[best] > num[best] * den
    while better.any():
        best = int(np.flatnonzero(better)[0])
        better = num * den[best] > num[best] * den
    return int(np.flatnonzero(num * den[best] == num[best] * den)[0])


def _require_efficacy(instance: CfpInstance) -> None:
    if instance.n1 == 0:
        raise UndefinedEfficacyError("grouping efficacy is undefined for a matrix without ones")


def _finish(
    instance: CfpInstance,
    solution: CfpSolution,
    nodes: int,
    method: Method,
    lambdas: tuple[Fraction, ...] = (),
) -> SolveResult:
    best = canonicalize(solution)
    report = evaluate(instance, best)
    logger.info(
        f"{method} solve on {instance.m}x{instance.p}: nodes={nodes} "
        f"e={report.e} v={report.v} f1={report.f1}"
    )
    return SolveResult(best=best, report=report, nodes=nodes, method=method, lambdas=lambdas)


# --- Oracle ---


def oracle_solve(
    instance: CfpInstance, objective: Objective, config: SolverConfig | None = None
) -> SolveResult:
    """
    Global optimum by exhaustive joint enumeration of machine and part labellings.

    Every canonical labelling with at most `max_cells` cells is scored once, so ties are
    broken towards the lexicographically smallest canonical solution.

    Raises:
        GuardViolationError: If m or p exceeds `config.oracle_max_dim`.
        UndefinedEfficacyError: For the efficacy objective on a matrix without ones.
    """
    config = config or SolverConfig()
    if max(instance.m, instance.p) > config.oracle_max_dim:
        raise GuardViolationError(
            f"oracle accepts m, p <= {config.oracle_max_dim}; got {instance.m}x{instance.p}"
        )
    if objective is Objective.EFFICACY:
        _require_efficacy(instance)

    arrays = _arrays(instance)
    m, n1 = instance.m, instance.n1
    labellings = PartitionIterator(instance.m + instance.p, instance.max_cells)

    def score(batch_index: int, labels: np.ndarray) -> _Candidate:
        same = labels[:, :m, None] == labels[:, None, m:]
        inside = (same * arrays.ones).sum(axis=(1, 2))
        voids = (same * arrays.zeros).sum(axis=(1, 2))
        if objective is Objective.F1:
            values = (n1 - inside) + voids
            b = int(np.argmin(values))
            key: int | Fraction = int(values[b])
        else:
            b = _first_ratio_max(inside, n1 + voids)
            key = -Fraction(int(inside[b]), int(n1 + voids[b]))
        row = tuple(int(k) for k in labels[b])
        return _Candidate(key, batch_index * config.batch_size + b, row[:m], row[m:])

    best = _scan(labellings.batches(config.batch_size), score, config.threads)
    return _finish(
        instance, CfpSolution(best.machine_cell, best.part_cell), len(labellings), Method.ORACLE
    )


# --- Exact per-part decomposition ---


class _Search(NamedTuple):
    instance: CfpInstance
    merge_map: MergeMap | None
    transposed: bool


def _prepare(instance: CfpInstance, config: SolverConfig, use_merge: bool) -> _Search:
    work, merge_map = merge(instance) if use_merge else (instance, None)
    transposed = work.p < work.m
    if transposed:
        work = work.transpose()
    if work.m > config.exact_max_rows:
        raise GuardViolationError(
            f"exact search enumerates partitions of {work.m} rows; guard is "
            f"{config.exact_max_rows}"
        )
    return _Search(work, merge_map, transposed)


def _restore(search: _Search, solution: CfpSolution) -> CfpSolution:
    if search.transposed:
        solution = solution.transpose()
    if search.merge_map is not None:
        solution = unmerge_solution(solution, search.merge_map)
    return solution


def _partitions(search: _Search) -> PartitionIterator:
    return PartitionIterator(search.instance.m, search.instance.max_cells)


def _min_f1(search: _Search, config: SolverConfig) -> _Candidate:
    arrays = _arrays(search.instance)
    cells = search.instance.max_cells

    def score(batch_index: int, labels: np.ndarray) -> _Candidate:
        inside, cell_weight = _cell_sums(arrays, labels, cells)
        costs = _f1_part_costs(arrays, inside, cell_weight)
        totals = costs.min(axis=1).sum(axis=1)
        b = int(np.argmin(totals))
        return _Candidate(
            int(totals[b]),
            batch_index * config.batch_size + b,
            tuple(int(k) for k in labels[b]),
            tuple(int(k) for k in costs[b].argmin(axis=0)),
        )

    return _scan(_partitions(search).batches(config.batch_size), score, config.threads)


def _max_parametric(search: _Search, lam: Fraction, config: SolverConfig) -> _Candidate:
    """Maximizes den·((n1 − e) − λ(n1 + v)); the key is its negation."""
    arrays = _arrays(search.instance)
    cells = search.instance.max_cells
    offset = lam.numerator * search.instance.n1

    def score(batch_index: int, labels: np.ndarray) -> _Candidate:
        inside, cell_weight = _cell_sums(arrays, labels, cells)
        scores = _parametric_part_scores(arrays, inside, cell_weight, lam)
        totals = scores.max(axis=1).sum(axis=1) - offset
        b = int(np.argmax(totals))
        return _Candidate(
            -int(totals[b]),
            batch_index * config.batch_size + b,
            tuple(int(k) for k in labels[b]),
            tuple(int(k) for k in scores[b].argmax(axis=0)),
        )

    return _scan(_partitions(search).batches(config.batch_size), score, config.threads)


def exact_solve_f1(instance: CfpInstance, config: SolverConfig | None = None) -> SolveResult:
    """
    Minimum of f1 = e + v.

    For every machine partition with at most `max_cells` blocks each part takes its
    cheapest cell, preferring the lowest index and then an unused cell. Identical rows and
    columns are merged first when `config.merge_for_f1` is set, and the smaller merged
    side is the one enumerated.

    Raises:
        GuardViolationError: If the enumerated side exceeds `config.exact_max_rows`.
    """
    config = config or SolverConfig()
    search = _prepare(instance, config, config.merge_for_f1)
    best = _min_f1(search, config)
    solution = _restore(search, CfpSolution(best.machine_cell, best.part_cell))
    return _finish(instance, solution, len(_partitions(search)), Method.EXACT)


def exact_solve_f2(instance: CfpInstance, config: SolverConfig | None = None) -> SolveResult:
    """
    Maximum grouping efficacy by Dinkelbach iteration.

    Starting from λ = 0, each round maximizes (n1 − e) − λ(n1 + v) over all solutions
    through the per-part decomposition and moves λ to the efficacy of the maximizer. The
    loop stops when the parametric optimum is exactly zero; λ then equals the optimum
    and increases strictly on the way.

    Raises:
        GuardViolationError: If the enumerated side exceeds `config.exact_max_rows`.
        UndefinedEfficacyError: If the matrix has no ones.
    """
    config = config or SolverConfig()
    _require_efficacy(instance)
    search = _prepare(instance, config, use_merge=True)
    per_round = len(_partitions(search))

    lam = Fraction(0)
    lambdas = [lam]
    rounds = 0
    while True:
        rounds += 1
        best = _max_parametric(search, lam, config)
        candidate = CfpSolution(best.machine_cell, best.part_cell)
        logger.debug(f"Dinkelbach round {rounds}: lambda={lam} value={-best.key}")
        if best.key == 0:
            break
        lam = evaluate(search.instance, candidate).f2
        lambdas.append(lam)

    solution = _restore(search, candidate)
    return _finish(instance, solution, rounds * per_round, Method.EXACT, tuple(lambdas))


def solve(
    instance: CfpInstance,
    objective: Objective,
    method: Method = Method.EXACT,
    config: SolverConfig | None = None,
    seed: int = 0,
) -> SolveResult:
    """Dispatches to the solver selected by `method`."""
    if method is Method.ORACLE:
        return oracle_solve(instance, objective, config)
    if method is Method.HEURISTIC:
        return heuristic_solve(instance, objective, seed=seed, config=config)
    if objective is Objective.F1:
        return exact_solve_f1(instance, config)
    return exact_solve_f2(instance, config)


def decide(
    instance: CfpInstance,
    query: DecisionQuery,
    method: Method = Method.EXACT,
    config: SolverConfig | None = None,
) -> Decision:
    """
    Answers whether some solution meets the query threshold.

    The witness of a yes answer is an optimal solution.

    Raises:
        MalformedQueryError: If a heuristic is asked to certify an answer.
    """
    if method is Method.HEURISTIC:
        raise MalformedQueryError("decisions need an exact method; the heuristic cannot prove no")
    result = solve(instance, query.objective, method, config)
    answer = query.is_met(result.report)
    return Decision(answer=answer, witness=result.best if answer else None, report=result.report)


# --- Alternating improvement heuristic ---


def _best_response(
    instance: CfpInstance,
    anchors: tuple[int, ...],
    current: tuple[int, ...],
    objective: Objective,
    lam: Fraction,
) -> tuple[int, ...]:
    """
    Best cell per column given the row cells; keeps the current cell on ties.
    """
    arrays = _arrays(instance)
    inside, cell_weight = _cell_sums(
        arrays, np.array([anchors], dtype=np.int64), instance.max_cells
    )
    if objective is Objective.F1:
        merit = -_f1_part_costs(arrays, inside, cell_weight)[0]
    else:
        merit = _parametric_part_scores(arrays, inside, cell_weight, lam)[0]
    chosen = merit.argmax(axis=0)
    columns = np.arange(instance.p)
    keep = merit[np.array(current), columns] == merit[chosen, columns]
    return tuple(int(k) for k in np.where(keep, np.array(current), chosen))


def _objective_key(report: ObjectiveReport, objective: Objective) -> int | Fraction:
    return report.f1 if objective is Objective.F1 else -report.f2


def heuristic_solve(
    instance: CfpInstance,
    objective: Objective,
    seed: int = 0,
    max_iters: int | None = None,
    config: SolverConfig | None = None,
    start: CfpSolution | None = None,
) -> SolveResult:
    """
    Alternating improvement from a seeded random (or given) solution.

    Each round reassigns every part to its best cell given the machine cells, then every
    machine given the part cells. For efficacy, "best" maximizes the linear surrogate
    (n1 − e) − λ(n1 + v) at λ = current efficacy, which never lowers the efficacy. A step
    that would worsen the objective is rejected and the search stops, as it does when a
    round changes nothing or `max_iters` rounds have run.
    """
    config = config or SolverConfig()
    max_iters = max_iters or config.heuristic_max_iters
    if objective is Objective.EFFICACY:
        _require_efficacy(instance)

    if start is None:
        rng = np.random.default_rng(seed)
        start = CfpSolution(
            tuple(int(k) for k in rng.integers(0, instance.max_cells, instance.m)),
            tuple(int(k) for k in rng.integers(0, instance.max_cells, instance.p)),
        )
    current = start
    report = evaluate(instance, current)
    transposed = instance.transpose()

    iters = 0
    while iters < max_iters:
        iters += 1
        previous = current
        for flip in (False, True):
            lam = report.f2 if objective is Objective.EFFICACY else Fraction(0)
            if flip:
                machines = _best_response(
                    transposed, current.part_cell, current.machine_cell, objective, lam
                )
                step = CfpSolution(machines, current.part_cell)
            else:
                parts = _best_response(
                    instance, current.machine_cell, current.part_cell, objective, lam
                )
                step = CfpSolution(current.machine_cell, parts)
            step_report = evaluate(instance, step)
            if _objective_key(step_report, objective) > _objective_key(report, objective):
                break
            current, report = step, step_report
        if current == previous:
            break

    return _finish(instance, current, iters, Method.HEURISTIC)
