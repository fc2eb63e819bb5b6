"""
This module acts as the entry point for the cell formation solver pipeline.
It runs the pipeline stages in order, which makes debugging and testing easier.

Usage:
    uv run python main.py
"""

import sys

from src.pipeline.stage_01_fixture_check import FixtureCheckPipeline
from src.pipeline.stage_02_reduction_experiment import ReductionExperimentPipeline
from src.utils.exception import CustomException
from src.utils.logger import get_logger

logger = get_logger(headline="main.py")


try:
    # 1. Fixture Check
    fixture_check = FixtureCheckPipeline()
    if not fixture_check.main():
        logger.error("Fixture check failed; see artifacts/fixture_check/report.json")

    # 2. Reduction Experiment
    reduction_experiment = ReductionExperimentPipeline()
    reduction_experiment.main()

except Exception as e:
    raise CustomException(e, sys)
