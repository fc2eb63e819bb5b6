"""
Configuration Manager for the cell formation solver.

- Coordinates the static paths of config/config.yaml with the tunables of
config/params.yaml, reading parameters through DVC when a repository is available.
- Transforms the raw YAML into strictly-typed configuration entities for the solvers,
the command-line interface and the pipeline stages.
"""

import os
import sys
from pathlib import Path

import dvc.api
from box import ConfigBox

from src.constants import CONFIG_FILE_PATH, PARAMS_FILE_PATH, PROJECT_ROOT
from src.entity.config_entity import (
    ExperimentConfig,
    FixtureCheckConfig,
    GeneratorConfig,
    SolverConfig,
)
from src.utils.common import create_directories, read_yaml
from src.utils.exception import CustomException
from src.utils.mlflow_config import get_mlflow_uri


class ConfigurationManager:
    """
    Single entry point to project configuration and parameters.

    Attributes:
        config (ConfigBox): Static path settings.
        params (ConfigBox): Tunable parameters, versioned by DVC.
    """

    def __init__(
        self,
        config_filepath: Path = CONFIG_FILE_PATH,
        params_filepath: Path = PARAMS_FILE_PATH,
    ) -> None:
        try:
            self.config = read_yaml(Path(config_filepath))

            # DVC API expects paths relative to the project root
            rel_params_path = os.path.relpath(params_filepath, PROJECT_ROOT)

            try:
                self.params = ConfigBox(dvc.api.params_show(rel_params_path))
            except Exception:
                # Fallback for installs without .git/.dvc
                self.params = read_yaml(Path(params_filepath))

            create_directories([self.config.artifacts_root])

        except Exception as e:
            raise CustomException(e, sys)

    def get_solver_config(self) -> SolverConfig:
        """
        Returns:
            SolverConfig: Guards, threads and batch size shared by all solvers.
        """
        try:
            return SolverConfig(**self.params.solver.to_dict())
        except Exception as e:
            raise CustomException(e, sys)

    def get_generator_config(self) -> GeneratorConfig:
        try:
            return GeneratorConfig(**self.params.generator.to_dict())
        except Exception as e:
            raise CustomException(e, sys)

    def get_fixture_check_config(self) -> FixtureCheckConfig:
        """
        Creates the Fixture Check configuration entity.

        Returns:
            FixtureCheckConfig: Fixture paths, expected counts and output files.
        """
        try:
            config = self.config.fixture_check
            fixtures = self.config.fixtures
            params = self.params.fixture_check

            create_directories([config.root_dir])

            return FixtureCheckConfig(
                root_dir=Path(config.root_dir),
                STATUS_FILE=Path(config.STATUS_FILE),
                report_file=Path(config.report_file),
                instance_file=PROJECT_ROOT / fixtures.instance_file,
                solution_file=PROJECT_ROOT / fixtures.solution_file,
                expected_n1=int(params.expected_n1),
                expected_exceptions=int(params.expected_exceptions),
                expected_voids=int(params.expected_voids),
                expected_efficacy=params.expected_efficacy,
            )
        except Exception as e:
            raise CustomException(e, sys)

    def get_experiment_config(self) -> ExperimentConfig:
        """
        Creates the padding-sweep configuration entity.

        Returns:
            ExperimentConfig: Sweep grid, output files and MLflow tracking settings.
        """
        try:
            config = self.config.reduction_experiment
            params = self.params.reduction_experiment

            create_directories([config.root_dir])

            return ExperimentConfig(
                root_dir=Path(config.root_dir),
                results_file=Path(config.results_file),
                metrics_file=Path(config.metrics_file),
                seeds=int(params.seeds),
                sizes=[tuple(size) for size in params.sizes],
                density=params.density,
                padding=[int(q) for q in params.padding],
                all_params=self.params.to_dict(),
                mlflow_uri=get_mlflow_uri(),
                experiment_name=str(self.params.mlflow.experiment_name),
            )
        except Exception as e:
            raise CustomException(e, sys)
