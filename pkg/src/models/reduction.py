"""
Deciding f1 ≤ c through an efficacy threshold on an extended matrix.

The instance A (m×p) is padded with an mp×mp block of ones on the diagonal. Any solution
of A lifts to the extended matrix Ã by putting the whole block in one extra cell, which
leaves e and v unchanged; with that much padding a smaller f1 always means a larger
efficacy, so "min f1(A) ≤ c" holds exactly when "max f2(Ã) ≥ 1 − c/ñ1".

Ã keeps the cell budget of A plus one for the block. The block is identical rows and
identical columns, so it is solved in merged form: one row and one column of weight mp.
"""

from collections.abc import Callable
from fractions import Fraction

from src.entity.cfp_entity import BoolMatrix, CfpInstance, CfpSolution
from src.entity.solver_entity import Decision, SolveResult
from src.entity.transform_entity import ExtendedInstance, MergeMap
from src.models.objective import canonicalize, evaluate
from src.models.preprocess import unmerge_solution
from src.models.solvers import exact_solve_f2
from src.utils.exception import (
    CellCapacityError,
    DimensionMismatchError,
    ThresholdRangeError,
    TrivialInstanceError,
    WeightedInstanceError,
)
from src.utils.logger import get_logger

logger = get_logger(__name__)

EfficacySolver = Callable[[CfpInstance], SolveResult]


def extend_with_block(instance: CfpInstance, size: int) -> ExtendedInstance:
    """
    Pads A with a size×size block of ones; any size ≥ 1 is accepted.

    Only size = mp gives the exact threshold correspondence (`extend_instance`). Smaller
    blocks are for measuring where it breaks.

    Raises:
        WeightedInstanceError: If A carries weights.
        TrivialInstanceError: If A has no ones.
    """
    if not instance.is_unweighted:
        raise WeightedInstanceError("the extension is defined for unweighted instances")
    if instance.n1 == 0:
        raise TrivialInstanceError("matrix has no ones; answer the decision directly")
    m, p = instance.m, instance.p
    rows = [row + (0,) * size for row in instance.matrix.rows]
    rows += [(0,) * p + (1,) * size for _ in range(size)]
    extended = CfpInstance(BoolMatrix(tuple(rows)), max_cells=instance.max_cells + 1)
    return ExtendedInstance(
        base=instance,
        extended=extended,
        delta_n1=size * size,
        block_rows=range(m, m + size),
        block_cols=range(p, p + size),
    )


def extend_instance(instance: CfpInstance) -> ExtendedInstance:
    """
    Builds Ã: A top-left, an mp×mp block of ones bottom-right, zeros elsewhere.

    Raises:
        WeightedInstanceError: If A carries weights.
        TrivialInstanceError: If A has no ones.
    """
    return extend_with_block(instance, instance.m * instance.p)


def merged_extension(extended: ExtendedInstance) -> CfpInstance:
    """Ã with the block collapsed into one row and one column of weight `block_size`."""
    base, size = extended.base, extended.block_size
    rows = [row + (0,) for row in base.matrix.rows] + [(0,) * base.p + (1,)]
    return CfpInstance(
        BoolMatrix(tuple(rows)),
        row_weights=(1,) * base.m + (size,),
        col_weights=(1,) * base.p + (size,),
        max_cells=extended.extended.max_cells,
    )


def block_merge_map(extended: ExtendedInstance) -> MergeMap:
    """Groups that unmerge a solution of `merged_extension` back onto Ã."""
    base = extended.base
    return MergeMap(
        row_groups=tuple((i,) for i in range(base.m)) + (tuple(extended.block_rows),),
        col_groups=tuple((j,) for j in range(base.p)) + (tuple(extended.block_cols),),
        m=extended.extended.m,
        p=extended.extended.p,
        max_cells=extended.extended.max_cells,
    )


def threshold_transform(c: int, extended: ExtendedInstance) -> Fraction:
    """
    Efficacy threshold 1 − c/ñ1 equivalent to the edit threshold c.

    Raises:
        ThresholdRangeError: Unless 0 ≤ c < mp.
    """
    mp = extended.base.m * extended.base.p
    if not 0 <= c < mp:
        raise ThresholdRangeError(f"threshold {c} outside [0, {mp}); answer it directly")
    return 1 - Fraction(c, extended.n1)


def lift_solution(
    solution: CfpSolution, extended: ExtendedInstance, merged: bool = False
) -> CfpSolution:
    """
    Puts every block row and block column into one fresh cell.

    With `merged=True` the result fits `merged_extension(extended)` instead of Ã.

    Raises:
        DimensionMismatchError: If the solution does not fit A.
    """
    base = extended.base
    if len(solution.machine_cell) != base.m or len(solution.part_cell) != base.p:
        raise DimensionMismatchError(
            f"solution does not fit the {base.m}x{base.p} base instance"
        )
    solution = canonicalize(solution)
    fresh = solution.num_cells
    copies = 1 if merged else extended.block_size
    return CfpSolution(
        solution.machine_cell + (fresh,) * copies,
        solution.part_cell + (fresh,) * copies,
    )


def project_solution(
    solution: CfpSolution, extended: ExtendedInstance, merged: bool = False
) -> CfpSolution:
    """
    Restricts a solution of Ã (or of its merged form) to the rows and columns of A.

    Raises:
        DimensionMismatchError: If the solution does not fit the extended instance.
        CellCapacityError: If the restriction uses more cells than A allows.
    """
    base = extended.base
    target = merged_extension(extended) if merged else extended.extended
    if len(solution.machine_cell) != target.m or len(solution.part_cell) != target.p:
        raise DimensionMismatchError(
            f"solution does not fit the {target.m}x{target.p} extended instance"
        )
    projected = canonicalize(
        CfpSolution(solution.machine_cell[: base.m], solution.part_cell[: base.p])
    )
    if projected.num_cells > base.max_cells:
        raise CellCapacityError(
            f"projection uses {projected.num_cells} cells, budget is {base.max_cells}"
        )
    return projected


def _trivial_decision(instance: CfpInstance, c: int) -> Decision:
    if instance.n1 == 0 and instance.max_cells >= 2:
        witness = CfpSolution((0,) * instance.m, (1,) * instance.p)
    else:
        # one cell holding everything: f1 is the number of zeros, at most mp
        witness = CfpSolution((0,) * instance.m, (0,) * instance.p)
    report = evaluate(instance, witness)
    answer = report.f1 <= c
    return Decision(answer=answer, witness=witness if answer else None, report=report)


def decide_cfp1_via_cfp2(
    instance: CfpInstance, c: int, solver: EfficacySolver | None = None
) -> Decision:
    """
    Answers "is min f1 ≤ c?" with an efficacy optimization on the extended matrix.

    Matrices without ones and thresholds c ≥ mp are answered directly, without building
    Ã. Otherwise `solver` (default `exact_solve_f2`) maximizes efficacy on the merged
    extension and the answer is whether that maximum reaches 1 − c/ñ1. A yes answer
    carries the projected optimum as witness when it fits A and meets c.

    Raises:
        ThresholdRangeError: If c is negative.
        WeightedInstanceError: If the instance carries weights.
    """
    if c < 0:
        raise ThresholdRangeError(f"threshold {c} must be non-negative")
    if not instance.is_unweighted:
        raise WeightedInstanceError("the reduction is defined for unweighted instances")
    if instance.n1 == 0 or c >= instance.m * instance.p:
        return _trivial_decision(instance, c)

    solver = solver or exact_solve_f2
    extended = extend_instance(instance)
    threshold = threshold_transform(c, extended)
    result = solver(merged_extension(extended))
    answer = result.report.f2 >= threshold
    logger.info(
        f"Reduction for c={c}: max efficacy {result.report.f2} vs threshold {threshold} "
        f"-> {'yes' if answer else 'no'}"
    )
    if not answer:
        return Decision(answer=False)

    lifted = unmerge_solution(result.best, block_merge_map(extended))
    try:
        witness = project_solution(lifted, extended)
    except CellCapacityError as e:
        logger.warning(f"Reduction witness dropped: {e}")
        return Decision(answer=True)
    report = evaluate(instance, witness)
    if report.f1 > c:
        logger.warning(f"Projected witness has f1={report.f1} above threshold {c}; dropped")
        return Decision(answer=True)
    return Decision(answer=True, witness=witness, report=report)
