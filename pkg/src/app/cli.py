"""
Command-line surface of the cell formation solver.

Results go to stdout, errors to stderr as one line starting with "error:".

Exit codes:
    0   success; `decide` answered yes; `verify` found no violation
    1   `decide` answered no; `verify` reported violations
    2   any other solver error
    64  usage error
    65  malformed input file
    70  size guard or size contract exceeded

Usage:
    uv run cfp solve --objective efficacy --method exact fixtures/table1.cfp
    uv run cfp decide --objective f1 --threshold 12 --via-reduction fixtures/table1.cfp
"""

from enum import StrEnum
from fractions import Fraction
from functools import cache
from pathlib import Path
from typing import Annotated

import click
import typer

from src.components.file_io import (
    parse_edge_list,
    parse_instance,
    read_instance,
    read_solution,
    read_text,
    write_edge_list,
    write_instance,
    write_solution,
)
from src.components.generator import generate
from src.constants import PARAMS_FILE_PATH
from src.entity.cfp_entity import ObjectiveReport
from src.entity.config_entity import GeneratorConfig, SolverConfig
from src.entity.solver_entity import DecisionQuery, Method, Objective
from src.models.bgep_bridge import bgep_to_cfp, cfp_to_bgep
from src.models.objective import evaluate, validate
from src.models.reduction import (
    decide_cfp1_via_cfp2,
    extend_instance,
    merged_extension,
    threshold_transform,
)
from src.models.solvers import decide as decide_query
from src.models.solvers import solve as solve_instance
from src.utils.common import read_yaml
from src.utils.exception import (
    CfpError,
    GuardViolationError,
    InstanceParseError,
    MalformedQueryError,
    SizeContractError,
)
from src.utils.logger import get_logger

logger = get_logger(__name__)

EXIT_ERROR = 2
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_SOFTWARE = 70

app = typer.Typer(
    name="cfp",
    help="Exact solvers and reductions for the cell formation problem.",
    no_args_is_help=True,
    add_completion=False,
    pretty_exceptions_enable=False,
)

InputFile = Annotated[Path, typer.Argument(exists=True, dir_okay=False, readable=True)]


class Format(StrEnum):
    BGEP = "bgep"
    CFP = "cfp"


@cache
def _base_solver_config() -> SolverConfig:
    try:
        return SolverConfig(**read_yaml(PARAMS_FILE_PATH).solver.to_dict())
    except Exception as e:
        logger.warning(f"Falling back to default solver settings: {e}")
        return SolverConfig()


@cache
def _generator_config() -> GeneratorConfig:
    try:
        return GeneratorConfig(**read_yaml(PARAMS_FILE_PATH).generator.to_dict())
    except Exception as e:
        logger.warning(f"Falling back to default generator settings: {e}")
        return GeneratorConfig()


def _solver_config(threads: int | None) -> SolverConfig:
    config = _base_solver_config()
    return config if threads is None else config.model_copy(update={"threads": threads})


def _report_text(report: ObjectiveReport) -> str:
    efficacy = str(report.f2) if report.has_efficacy else "undefined"
    return (
        f"n1 {report.n1}\n"
        f"exceptions {report.e}\n"
        f"voids {report.v}\n"
        f"f1 {report.f1}\n"
        f"efficacy {efficacy}\n"
    )


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise typer.BadParameter(f"{text!r} is not a fraction num/den or a decimal")


def _integer_threshold(text: str) -> int:
    value = _rational(text)
    if value.denominator != 1:
        raise MalformedQueryError(f"an f1 threshold must be an integer, got {text}")
    return int(value)


@app.command()
def solve(
    file: InputFile,
    objective: Objective = typer.Option(Objective.F1, help="Objective to optimize."),
    method: Method = typer.Option(Method.EXACT, help="Search method."),
    seed: int = typer.Option(0, help="Seed of the heuristic start."),
    threads: int | None = typer.Option(None, min=1, help="Worker threads."),
) -> None:
    """Prints the objective report and the best solution found."""
    instance = read_instance(file)
    result = solve_instance(instance, objective, method, _solver_config(threads), seed)
    typer.echo(_report_text(result.report) + write_solution(result.best), nl=False)


@app.command()
def reduce(
    file: InputFile,
    c: int | None = typer.Option(None, "--c", help="f1 threshold to transform."),
    merged: bool = typer.Option(False, help="Collapse the block to one weighted row/column."),
) -> None:
    """Prints the extended instance, and the efficacy threshold when --c is given."""
    extended = extend_instance(read_instance(file))
    target = merged_extension(extended) if merged else extended.extended
    typer.echo(write_instance(target), nl=False)
    if c is not None:
        threshold = threshold_transform(c, extended)
        typer.echo(f"threshold: {threshold.numerator}/{threshold.denominator}")


@app.command()
def convert(
    file: InputFile,
    to: Format = typer.Option(..., help="Output format."),
) -> None:
    """Converts an instance to a bipartite edge list (bgep) or back (cfp)."""
    text = read_text(file)
    if to is Format.BGEP:
        typer.echo(write_edge_list(cfp_to_bgep(parse_instance(text))), nl=False)
    else:
        typer.echo(write_instance(bgep_to_cfp(parse_edge_list(text))), nl=False)


@app.command()
def decide(
    file: InputFile,
    objective: Objective = typer.Option(..., help="f1 (at most) or efficacy (at least)."),
    threshold: str = typer.Option(..., help="Integer for f1; num/den or decimal for efficacy."),
    via_reduction: bool = typer.Option(
        False, help="Decide through the efficacy optimum of the extended matrix."
    ),
    method: Method = typer.Option(Method.EXACT, help="exact or oracle."),
    threads: int | None = typer.Option(None, min=1, help="Worker threads."),
) -> None:
    """Prints yes or no; exits 0 for yes and 1 for no."""
    if method is Method.HEURISTIC:
        raise MalformedQueryError("decisions need an exact method; the heuristic cannot prove no")
    instance = read_instance(file)
    config = _solver_config(threads)
    if objective is Objective.F1:
        query = DecisionQuery(objective, _integer_threshold(threshold))
    else:
        query = DecisionQuery(objective, _rational(threshold))

    if via_reduction and objective is Objective.F1:
        answer = decide_cfp1_via_cfp2(
            instance,
            int(query.threshold),
            solver=lambda target: solve_instance(target, Objective.EFFICACY, method, config),
        ).answer
    elif via_reduction:
        # the efficacy threshold applies to the extended matrix itself
        target = merged_extension(extend_instance(instance))
        answer = decide_query(target, query, method, config).answer
    else:
        answer = decide_query(instance, query, method, config).answer

    typer.echo("yes" if answer else "no")
    raise typer.Exit(0 if answer else 1)


@app.command()
def verify(instance_file: InputFile, solution_file: InputFile) -> None:
    """Prints the objective report of a solution, or its violations (exit 1)."""
    instance = read_instance(instance_file)
    solution = read_solution(solution_file)
    violations = validate(instance, solution)
    if violations:
        for violation in violations:
            typer.echo(f"violation: {violation}")
        raise typer.Exit(1)
    typer.echo(_report_text(evaluate(instance, solution)), nl=False)


@app.command()
def gen(
    m: int = typer.Option(..., "-m", min=1, help="Number of machines."),
    p: int = typer.Option(..., "-p", min=1, help="Number of parts."),
    density: str | None = typer.Option(
        None, help="Probability of a one, num/den or decimal. Defaults to params.yaml."
    ),
    seed: int | None = typer.Option(None, help="Generator seed. Defaults to params.yaml."),
) -> None:
    """Prints a seeded random instance."""
    defaults = _generator_config()
    value = defaults.density if density is None else _rational(density)
    seed = defaults.seed if seed is None else seed
    if not 0 <= value <= 1:
        raise typer.BadParameter(f"density {density} outside [0, 1]")
    typer.echo(write_instance(generate(m, p, value, seed)), nl=False)


def _fail(message: str, code: int) -> int:
    typer.echo(f"error: {message}", err=True)
    return code


def main(argv: list[str] | None = None) -> int:
    """Runs the CLI and returns its exit code instead of exiting."""
    try:
        result = app(args=argv, prog_name="cfp", standalone_mode=False)
        return result if isinstance(result, int) else 0
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.exceptions.UsageError as e:
        return _fail(e.format_message().replace("\n", " "), EXIT_USAGE)
    except click.exceptions.Abort:
        return _fail("aborted", EXIT_ERROR)
    except InstanceParseError as e:
        return _fail(str(e), EXIT_DATA)
    except (GuardViolationError, SizeContractError) as e:
        return _fail(str(e), EXIT_SOFTWARE)
    except CfpError as e:
        return _fail(str(e), EXIT_ERROR)
    except OSError as e:
        return _fail(str(e), EXIT_ERROR)


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
