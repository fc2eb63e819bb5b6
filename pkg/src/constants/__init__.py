"""
Project-wide path constants and model limits.

Single source of truth for configuration file paths, fixture locations
and the integer-size contract. Every module should import paths from here
instead of hardcoding strings.
"""

from pathlib import Path

# --- Project Root ---
# Automatically finds the top-level directory (the one containing 'src/')
PROJECT_ROOT = Path(__file__).resolve().parents[2]

# --- Configuration ---
CONFIG_DIR = PROJECT_ROOT / "config"
CONFIG_FILE_PATH = CONFIG_DIR / "config.yaml"
PARAMS_FILE_PATH = CONFIG_DIR / "params.yaml"

# --- Fixtures (worked example instance, solution and merged extension) ---
FIXTURES_DIR = PROJECT_ROOT / "fixtures"
TABLE1_INSTANCE = FIXTURES_DIR / "table1.cfp"
TABLE2_SOLUTION = FIXTURES_DIR / "table2.sol"
TABLE4_INSTANCE = FIXTURES_DIR / "table4.cfp"

# --- Logs ---
LOGS_DIR = PROJECT_ROOT / "logs"

# --- Size contract ---
# All objective arithmetic stays exact in int64 below this many matrix entries.
MAX_MATRIX_ENTRIES = 10_000

# Largest total weight sum(row_weights)·sum(col_weights). Weighted counts and the
# efficacy scores (products of two such counts, doubled) then fit in int64.
MAX_TOTAL_WEIGHT = 2**30

LOGS_DIR.mkdir(parents=True, exist_ok=True)
