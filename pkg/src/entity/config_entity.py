"""
Configuration entities for the cell formation solver.
These models enforce strict type safety and validation at startup to prevent
runtime attribute errors across solvers, the CLI and pipeline stages.

Fail-Fast Validation: extra="forbid" on every model, so a params.yaml typo stops
the run immediately instead of silently falling back to a default guard.
"""

from fractions import Fraction
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator


def _as_fraction(value: Any) -> Fraction:
    fraction = Fraction(str(value))
    if not 0 <= fraction <= 1:
        raise ValueError("density must lie in [0, 1]")
    return fraction


class SolverConfig(BaseModel):
    """
    Guards and execution settings shared by all solvers.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    oracle_max_dim: int = Field(6, ge=1, description="Largest m or p the oracle accepts")
    exact_max_rows: int = Field(12, ge=1, description="Largest enumerated side after merging")
    threads: int = Field(1, ge=1, description="Worker threads over partition ranges")
    batch_size: int = Field(4096, ge=1, description="Partitions scored per numpy batch")
    heuristic_max_iters: int = Field(100, ge=1)
    merge_for_f1: bool = Field(True, description="Merge identical rows/columns for exact f1")


class GeneratorConfig(BaseModel):
    """
    Defaults of the seeded random instance generator.
    """

    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)

    density: Fraction = Fraction(1, 2)
    seed: int = 42

    @field_validator("density", mode="before")
    @classmethod
    def parse_density(cls, value: Any) -> Fraction:
        return _as_fraction(value)


class FixtureCheckConfig(BaseModel):
    """
    Configuration for the fixture reproduction stage.
    """

    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)

    root_dir: Path
    STATUS_FILE: Path
    report_file: Path
    instance_file: Path
    solution_file: Path
    expected_n1: int
    expected_exceptions: int
    expected_voids: int
    expected_efficacy: Fraction

    @field_validator("expected_efficacy", mode="before")
    @classmethod
    def parse_efficacy(cls, value: Any) -> Fraction:
        return Fraction(str(value))


class ExperimentConfig(BaseModel):
    """
    Configuration for the reduction padding-sweep experiment (MLflow tracking).
    """

    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)

    root_dir: Path
    results_file: Path
    metrics_file: Path
    seeds: int = Field(..., ge=1)
    sizes: list[tuple[int, int]]
    density: Fraction
    padding: list[int]
    all_params: dict[str, Any]
    mlflow_uri: str
    experiment_name: str

    @field_validator("density", mode="before")
    @classmethod
    def parse_density(cls, value: Any) -> Fraction:
        return _as_fraction(value)
