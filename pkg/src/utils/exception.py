"""
Exception handling for the project.

Two layers live here:
- `CustomException` wraps any failure inside a pipeline stage with the file name and
  line number where it happened, so automated runs never fail silently.
- `CfpError` and its subclasses are the typed domain errors raised by the solver core.
  The CLI maps them onto its exit-code contract, so they are never wrapped there.
"""

from types import ModuleType


def error_message_detail(error: Exception | str, error_detail: ModuleType) -> str:
    """
    Extracts the detailed error message including file name and line number.

    Args:
        error (Exception | str): The exception or error message.
        error_detail (ModuleType): The sys module to access execution info.

    Returns:
        str: A formatted error message string.
    """
    _, _, exc_tb = error_detail.exc_info()

    # Handle case where traceback might be None
    if exc_tb is not None:
        file_name = exc_tb.tb_frame.f_code.co_filename
        line_number = exc_tb.tb_lineno
    else:
        file_name = "unknown"
        line_number = 0

    return (
        f"Error occurred in python script: [{file_name}] "
        f"line number: [{line_number}] "
        f"error message: [{error!s}]"
    )


class CustomException(Exception):
    """
    Stage-level exception carrying traceback details within the message.

    The wrapped error stays reachable through `original` so callers can still
    dispatch on the domain error type.
    """

    def __init__(self, error_message: Exception | str, error_detail: ModuleType):
        self.original = error_message
        self.detailed_message = error_message_detail(error=error_message, error_detail=error_detail)
        super().__init__(self.detailed_message)

    def __str__(self) -> str:
        return self.detailed_message


class CfpError(Exception):
    """Base class of every domain error raised by the cell-formation core."""


class DimensionMismatchError(CfpError):
    """Solution, weights or edits do not match the instance dimensions."""


class CellIndexError(CfpError):
    """A cell index is negative or not below the instance cell budget."""


class UndefinedEfficacyError(CfpError):
    """Grouping efficacy requested where n1 + v = 0."""


class WeightedInstanceError(CfpError):
    """An operation defined only for unit weights received a weighted instance."""


class TrivialInstanceError(CfpError):
    """The instance has no ones; the decision question is answered directly."""


class ThresholdRangeError(CfpError):
    """A decision threshold lies outside the range the transform is defined on."""


class MalformedQueryError(CfpError):
    """A decision query combines an objective with an incompatible threshold or method."""


class GuardViolationError(CfpError):
    """An exact search was asked to run beyond its configured size guard."""


class SizeContractError(CfpError):
    """The matrix exceeds the entry count for which integer arithmetic is guaranteed."""


class InconsistentEditError(CfpError):
    """An edit set adds an existing edge, removes a missing one, or overlaps itself."""


class NotBiclusterError(CfpError):
    """The edited graph is not a disjoint union of bicliques."""


class CellCapacityError(CfpError):
    """The edited graph needs more cells than the instance cell budget allows."""


class InstanceParseError(CfpError):
    """A text file could not be parsed; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
