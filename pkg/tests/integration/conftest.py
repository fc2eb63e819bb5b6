import pytest

from src.components.generator import generate
from src.entity.cfp_entity import CfpInstance

SMALL_SIZES = [(2, 2), (2, 3), (3, 2), (3, 3)]
SEEDS = range(100)


@pytest.fixture(scope="session")
def seeded_small_instances() -> list[CfpInstance]:
    """Every size with m, p in {2, 3} for each of the 100 seeds, density 1/2."""
    return [generate(m, p, "1/2", seed) for seed in SEEDS for m, p in SMALL_SIZES]
