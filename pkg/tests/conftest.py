import pytest

from src.components.file_io import read_instance, read_solution
from src.constants import TABLE1_INSTANCE, TABLE2_SOLUTION
from src.entity.cfp_entity import CfpInstance, CfpSolution
from src.utils.logger import get_logger


@pytest.fixture(scope="session", autouse=True)
def setup_logging():
    """
    Ensures that the FileHandler is attached during tests.
    Pytest's default logging configuration might capture or remove custom handlers,
    so we re-initialize our logger to ensure logs are written to running_logs.log.
    """
    get_logger()


@pytest.fixture(scope="session")
def table1() -> CfpInstance:
    """The 5×7 worked-example instance shipped in fixtures/."""
    return read_instance(TABLE1_INSTANCE)


@pytest.fixture(scope="session")
def table2(table1: CfpInstance) -> CfpSolution:
    """Three-cell solution of the worked example: e = 10, v = 2."""
    return read_solution(TABLE2_SOLUTION, table1)


@pytest.fixture
def block_diagonal() -> CfpInstance:
    """Two perfect cells: {m0, m1}×{p0, p1} and {m2}×{p2}."""
    return CfpInstance.from_rows([[1, 1, 0], [1, 1, 0], [0, 0, 1]])
