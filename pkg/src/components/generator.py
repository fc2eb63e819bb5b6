"""
Seeded random machine-part matrices.

Each entry is drawn from numpy's PCG64 generator (`default_rng(seed)`): with density
num/den an entry is 1 when a uniform integer in [0, den) is below num. The same
arguments always produce the same matrix, on every platform numpy supports.
"""

from fractions import Fraction

import numpy as np

from src.entity.cfp_entity import BoolMatrix, CfpInstance


def as_density(value: Fraction | int | float | str) -> Fraction:
    """
    Raises:
        ValueError: If the value is not a number in [0, 1].
    """
    density = Fraction(value) if isinstance(value, Fraction | int) else Fraction(str(value))
    if not 0 <= density <= 1:
        raise ValueError(f"density {density} outside [0, 1]")
    return density


def generate(m: int, p: int, density: Fraction | int | float | str, seed: int) -> CfpInstance:
    """
    Random unweighted m×p instance with the default cell budget.

    Args:
        m (int): Number of machines, at least 1.
        p (int): Number of parts, at least 1.
        density (Fraction | int | float | str): Probability of a one, e.g. "1/2".
        seed (int): Seed of the PCG64 generator.

    Raises:
        ValueError: On a non-positive dimension or a density outside [0, 1].
    """
    if m < 1 or p < 1:
        raise ValueError("need m >= 1 and p >= 1")
    density = as_density(density)
    rng = np.random.default_rng(seed)
    draws = rng.integers(0, density.denominator, size=(m, p))
    return CfpInstance(BoolMatrix.from_array((draws < density.numerator).astype(np.int64)))
