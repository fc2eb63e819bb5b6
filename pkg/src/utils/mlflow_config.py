"""
MLflow tracking setup for the padding sweep.

The tracking URI comes from MLFLOW_TRACKING_URI (a .env file is honoured), then from the
`mlflow.uri` key of config/params.yaml, then from a local ./mlruns store. With ENV set to
"production" the environment variable is mandatory.
"""

import os
from pathlib import Path

import mlflow
from box import ConfigBox
from dotenv import load_dotenv

from src.constants import PARAMS_FILE_PATH
from src.utils.common import read_yaml
from src.utils.logger import get_logger

logger = get_logger(__name__)

LOCAL_URI = "file:./mlruns"


def get_mlflow_uri(params_path: Path = PARAMS_FILE_PATH) -> str:
    """
    Resolves the tracking URI for the current environment.

    Args:
        params_path (Path): Path to params.yaml.

    Returns:
        str: MLflow tracking URI.

    Raises:
        RuntimeError: If ENV is production and MLFLOW_TRACKING_URI is unset.
    """
    load_dotenv()
    env = os.getenv("ENV", "local").lower()

    if uri := os.getenv("MLFLOW_TRACKING_URI"):
        logger.info(f"[ENV={env}] MLflow URI from environment: {uri}")
        return uri
    if env == "production":
        raise RuntimeError("Production mode requires MLFLOW_TRACKING_URI to be set.")

    if Path(params_path).exists():
        params = read_yaml(Path(params_path))
        section = params.get("mlflow") or ConfigBox()
        if uri := section.get("uri"):
            logger.info(f"[ENV={env}] MLflow URI from {Path(params_path).name}: {uri}")
            return str(uri)

    logger.info(f"[ENV={env}] MLflow URI fallback: {LOCAL_URI}")
    return LOCAL_URI


def start_tracking(uri: str, experiment_name: str) -> str:
    """
    Points MLflow at `uri` and selects (creating if needed) the named experiment.

    Returns:
        str: The experiment id runs will be logged under.
    """
    mlflow.set_tracking_uri(uri)
    experiment = mlflow.set_experiment(experiment_name)
    logger.info(f"Tracking '{experiment_name}' ({experiment.experiment_id}) at {uri}")
    return experiment.experiment_id
