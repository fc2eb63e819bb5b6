"""
This module serves as the 'Worker' for the Fixture Check Stage of the pipeline.
It re-evaluates the shipped worked example and compares its counts with the known values.
"""

import sys

from src.components.file_io import read_instance, read_solution
from src.entity.config_entity import FixtureCheckConfig
from src.models.objective import evaluate, validate
from src.utils.common import save_json
from src.utils.exception import CustomException
from src.utils.logger import get_logger

logger = get_logger(__name__)


class FixtureCheck:
    """
    Evaluates the fixture solution on the fixture instance and records whether n1, e, v
    and the grouping efficacy match their expected values.

    Attributes:
        config (FixtureCheckConfig): Fixture paths, expected counts and output files.
    """

    def __init__(self, config: FixtureCheckConfig):
        self.config = config

    def check(self) -> bool:
        """
        Returns:
            bool: True if the solution is valid and every count matches.

        Raises:
            CustomException: If a fixture cannot be read or parsed.
        """
        try:
            instance = read_instance(self.config.instance_file)
            solution = read_solution(self.config.solution_file, instance)
            violations = validate(instance, solution)
            report = evaluate(instance, solution)

            observed = {
                "n1": report.n1,
                "exceptions": report.e,
                "voids": report.v,
                "f1": report.f1,
                "efficacy": report.f2,
            }
            expected = {
                "n1": self.config.expected_n1,
                "exceptions": self.config.expected_exceptions,
                "voids": self.config.expected_voids,
                "efficacy": self.config.expected_efficacy,
            }
            mismatches = [key for key, value in expected.items() if observed[key] != value]
            status = not violations and not mismatches
            if violations:
                logger.error(f"Fixture solution is invalid: {'; '.join(map(str, violations))}")
            if mismatches:
                logger.error(f"Fixture counts differ from expected values: {mismatches}")

            save_json(
                path=self.config.report_file,
                data={"observed": observed, "expected": expected, "mismatches": mismatches},
            )
            with open(self.config.STATUS_FILE, "w") as f:
                f.write(f"Validation status: {status}\n")
                f.write(f"Efficacy: {observed['efficacy']}")

            logger.info(f"Fixture check finished with status {status}: {observed}")
            return status

        except Exception as e:
            raise CustomException(e, sys)
