"""
This module serves as the 'Conductor' for the Reduction Experiment Stage.
It runs the padding sweep and tracks its agreement metrics in MLflow.
"""

import sys

from src.components.experiment_runner import ReductionExperiment
from src.config.configuration import ConfigurationManager
from src.utils.exception import CustomException
from src.utils.logger import get_logger

STAGE_NAME = "Reduction Experiment Stage"
logger = get_logger(headline=STAGE_NAME)


class ReductionExperimentPipeline:
    """
    Orchestration class for the Reduction Experiment pipeline stage.
    """

    def main(self) -> None:
        """
        Main execution flow for the Reduction Experiment stage.

        Flow:
        1. Load Experiment and Solver Configs.
        2. Initialize ReductionExperiment Component.
        3. Run the sweep, then log parameters and metrics to MLflow.

        Raises:
            CustomException: If the sweep fails.
        """
        try:
            logger.info("🚀 Starting Reduction Experiment Pipeline 🚀")

            config = ConfigurationManager()
            experiment_config = config.get_experiment_config()
            solver_config = config.get_solver_config()

            experiment = ReductionExperiment(config=experiment_config, solver_config=solver_config)
            results = experiment.run()
            metrics = experiment.log_into_mlflow(results)

            logger.info(f"✅ Reduction Experiment Pipeline Completed: {metrics} ✅")

        except Exception as e:
            raise CustomException(e, sys)


if __name__ == "__main__":
    try:
        obj = ReductionExperimentPipeline()
        obj.main()
    except Exception as e:
        raise CustomException(e, sys)
