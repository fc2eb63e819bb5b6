"""
Solver-facing values: objectives, methods, results and decision queries.
"""

from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction

from src.entity.cfp_entity import CfpSolution, ObjectiveReport, Rational
from src.utils.exception import MalformedQueryError


class Objective(StrEnum):
    F1 = "f1"
    EFFICACY = "efficacy"


class Method(StrEnum):
    ORACLE = "oracle"
    EXACT = "exact"
    HEURISTIC = "heuristic"


@dataclass(frozen=True)
class SolveResult:
    """
    Best solution found by a solver together with its re-evaluated report.

    Attributes:
        best (CfpSolution): Canonical solution.
        report (ObjectiveReport): evaluate(instance, best).
        nodes (int): Partitions (or labelings) enumerated; iterations for the heuristic.
        method (Method): Oracle and exact results are optimal by construction.
        lambdas (tuple[Rational, ...]): Parameter trace of the fractional loop, if any.
    """

    best: CfpSolution
    report: ObjectiveReport
    nodes: int
    method: Method
    lambdas: tuple[Rational, ...] = field(default=())


@dataclass(frozen=True)
class DecisionQuery:
    """
    Decision version of the problem: is there a solution with f1 ≤ c (or f2 ≥ c̃)?

    Attributes:
        objective (Objective): Which inequality is asked.
        threshold (int | Rational): Integer c ≥ 0 for f1, rational c̃ in [0, 1] for efficacy.
    """

    objective: Objective
    threshold: int | Rational

    def __post_init__(self) -> None:
        if self.objective is Objective.F1:
            if isinstance(self.threshold, bool) or not isinstance(self.threshold, int):
                raise MalformedQueryError("an f1 threshold must be an integer")
            if self.threshold < 0:
                raise MalformedQueryError("an f1 threshold must be non-negative")
        else:
            threshold = Fraction(self.threshold)
            if not 0 <= threshold <= 1:
                raise MalformedQueryError("an efficacy threshold must lie in [0, 1]")
            object.__setattr__(self, "threshold", threshold)

    def is_met(self, report: ObjectiveReport) -> bool:
        if self.objective is Objective.F1:
            return report.f1 <= self.threshold
        return report.f2 >= self.threshold


@dataclass(frozen=True)
class Decision:
    """Answer to a decision query; `witness` is an optimal solution when yes."""

    answer: bool
    witness: CfpSolution | None = None
    report: ObjectiveReport | None = None
