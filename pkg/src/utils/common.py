"""
Helpers shared by the configuration layer, the CLI and the pipeline stages: YAML
loading, artifact directories and JSON reports with exact fractions.
"""

import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any

import yaml
from box import ConfigBox
from box.exceptions import BoxValueError
from ensure import ensure_annotations

from src.utils.exception import CustomException
from src.utils.logger import get_logger

logger = get_logger(__name__)


@ensure_annotations
def read_yaml(path_to_yaml: Path) -> ConfigBox:
    """
    Reads a YAML file and returns a ConfigBox.

    Args:
        path_to_yaml (Path): Path to the YAML file.

    Returns:
        ConfigBox: Dot-accessible mapping (e.g., params.solver.threads).

    Raises:
        ValueError: If the YAML file is empty.
        CustomException: If there is a parsing error.
    """
    try:
        with open(path_to_yaml) as yaml_file:
            content = yaml.safe_load(yaml_file)
            logger.info(f"yaml file: {path_to_yaml.name} loaded successfully")
            return ConfigBox(content)
    except BoxValueError:
        raise ValueError("yaml file is empty")
    except Exception as e:
        raise CustomException(e, sys)


def create_directories(paths: list[Path], verbose: bool = True) -> None:
    """Creates every directory in `paths` (parents included) if missing."""
    for path in paths:
        path = Path(path).resolve()
        path.mkdir(parents=True, exist_ok=True)
        if verbose:
            logger.info(f"created directory at: {path}")


def _to_json(value: Any) -> Any:
    # exact "a/b" form, never a float
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, Path):
        return str(value)
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


def save_json(path: Path, data: dict) -> None:
    """
    Saves a dictionary to a JSON file. Fraction and Path values are written as strings.
    """
    with open(path, "w") as f:
        json.dump(data, f, indent=4, default=_to_json)
    logger.info(f"json file saved at: {path}")
