"""
This module serves as the 'Conductor' for the Fixture Check Stage.
It re-evaluates the shipped worked example and writes its status file.
"""

import sys

from src.components.fixture_check import FixtureCheck
from src.config.configuration import ConfigurationManager
from src.utils.exception import CustomException
from src.utils.logger import get_logger

STAGE_NAME = "Fixture Check Stage"
logger = get_logger(headline=STAGE_NAME)


class FixtureCheckPipeline:
    """
    Orchestration class for the Fixture Check pipeline stage.
    """

    def main(self) -> bool:
        """
        Main execution flow for the Fixture Check stage.

        Flow:
        1. Load Fixture Check Config.
        2. Initialize FixtureCheck Component.
        3. Evaluate the fixture solution and write the report.

        Raises:
            CustomException: If the check cannot run.
        """
        try:
            logger.info("🚀 Starting Fixture Check Pipeline 🚀")

            config = ConfigurationManager()
            fixture_check_config = config.get_fixture_check_config()

            fixture_check = FixtureCheck(config=fixture_check_config)
            status = fixture_check.check()

            logger.info(f"✅ Fixture Check Pipeline Completed (status: {status}) ✅")
            return status

        except Exception as e:
            raise CustomException(e, sys)


if __name__ == "__main__":
    try:
        obj = FixtureCheckPipeline()
        obj.main()
    except Exception as e:
        raise CustomException(e, sys)
