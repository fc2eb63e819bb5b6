"""
This module runs the padding sweep of the f1-to-efficacy reduction and tracks it in MLflow.

For random instances and every threshold c < mp it compares the direct answer to
"min f1 ≤ c" with the answer read off the efficacy optimum of A padded by a q×q block of
ones. Full padding (q = mp) must always agree; smaller blocks show where the
equivalence starts to break.

Usage:
    Run the whole pipeline with:
        uv run python main.py
    Or only this stage with:
        uv run python -m src.pipeline.stage_02_reduction_experiment
    Browse the runs with:
        uv run mlflow ui --backend-store-uri ./mlruns
"""

import sys
from datetime import datetime

import mlflow
import pandas as pd
from tqdm import tqdm

from src.components.generator import generate
from src.entity.cfp_entity import CfpInstance
from src.entity.config_entity import ExperimentConfig, SolverConfig
from src.models.reduction import extend_with_block, merged_extension, threshold_transform
from src.models.solvers import exact_solve_f1, exact_solve_f2
from src.utils.common import save_json
from src.utils.exception import CustomException
from src.utils.logger import get_logger
from src.utils.mlflow_config import start_tracking

logger = get_logger(__name__)


class ReductionExperiment:
    """
    Sweeps the padding block size of the extended matrix over seeded instances.

    Attributes:
        config (ExperimentConfig): Output paths, sweep grid and MLflow settings.
        solver_config (SolverConfig): Guards and threads for the exact solvers.
    """

    def __init__(self, config: ExperimentConfig, solver_config: SolverConfig | None = None):
        self.config = config
        self.solver_config = solver_config or SolverConfig()

    def _paddings(self, instance: CfpInstance) -> list[int]:
        mp = instance.m * instance.p
        return sorted({q for q in self.config.padding if 1 <= q <= mp} | {mp})

    def _sweep_instance(self, instance: CfpInstance, seed: int) -> list[dict]:
        mp = instance.m * instance.p
        min_f1 = exact_solve_f1(instance, self.solver_config).report.f1
        rows = []
        for q in self._paddings(instance):
            extended = extend_with_block(instance, q)
            max_f2 = exact_solve_f2(merged_extension(extended), self.solver_config).report.f2
            agree = sum(
                (min_f1 <= c) == (max_f2 >= threshold_transform(c, extended)) for c in range(mp)
            )
            rows.append(
                {
                    "m": instance.m,
                    "p": instance.p,
                    "seed": seed,
                    "n1": instance.n1,
                    "padding": q,
                    "full_padding": q == mp,
                    "min_f1": min_f1,
                    "max_efficacy": str(max_f2),
                    "thresholds": mp,
                    "agreements": agree,
                }
            )
        return rows

    def run(self) -> pd.DataFrame:
        """
        Runs the sweep and writes the per-instance results as CSV.

        Instances without ones are skipped; their decision needs no reduction.

        Raises:
            CustomException: If any instance fails to solve or a file cannot be written.
        """
        try:
            rows: list[dict] = []
            grid = [(m, p, seed) for m, p in self.config.sizes for seed in range(self.config.seeds)]
            for m, p, seed in tqdm(grid, desc="Padding sweep"):
                instance = generate(m, p, self.config.density, seed)
                if instance.n1 == 0:
                    continue
                rows.extend(self._sweep_instance(instance, seed))

            results = pd.DataFrame(rows)
            results.to_csv(self.config.results_file, index=False)
            logger.info(f"Padding sweep: {len(results)} rows saved to {self.config.results_file}")
            return results
        except Exception as e:
            raise CustomException(e, sys)

    @staticmethod
    def summarize(results: pd.DataFrame) -> dict[str, float]:
        """Agreement rate per padding size, plus the rate at full padding."""
        metrics: dict[str, float] = {}
        for q, group in results.groupby("padding"):
            metrics[f"agreement_padding_{q}"] = float(
                group["agreements"].sum() / group["thresholds"].sum()
            )
        full = results[results["full_padding"]]
        metrics["agreement_full_padding"] = float(
            full["agreements"].sum() / full["thresholds"].sum()
        )
        metrics["instances"] = float(len(full))
        return metrics

    def log_into_mlflow(self, results: pd.DataFrame) -> dict[str, float]:
        """
        Saves the summary metrics locally and logs parameters, metrics and the results
        CSV as one MLflow run.

        Raises:
            CustomException: If MLflow logging fails.
        """
        try:
            metrics = self.summarize(results)
            save_json(path=self.config.metrics_file, data=metrics)
            if metrics["agreement_full_padding"] < 1:
                logger.warning("Full padding disagreed with the direct f1 decision")

            start_tracking(self.config.mlflow_uri, self.config.experiment_name)
            run_name = f"padding_sweep_{datetime.now():%Y-%m-%d_%H-%M}"
            with mlflow.start_run(run_name=run_name):
                for section, content in self.config.all_params.items():
                    if isinstance(content, dict):
                        for key, value in content.items():
                            mlflow.log_param(f"{section}_{key}", value)
                mlflow.log_metrics(metrics)
                mlflow.log_artifact(str(self.config.results_file))

            logger.info("Successfully logged padding sweep metrics to MLflow.")
            return metrics
        except Exception as e:
            raise CustomException(e, sys)
