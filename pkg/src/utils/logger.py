"""
Centralized logging configuration for the solver, the pipeline stages and the CLI.

Everything is appended to logs/running_logs.log. The console only shows records at or
above CFP_LOG_LEVEL (default WARNING) and writes them to stderr, so `cfp` results on
stdout stay machine-readable.

Usage:
    from src.utils.logger import get_logger
    logger = get_logger(__name__)
    logger.info("Enumerating machine partitions...")
"""

import logging
import os
from datetime import datetime
from logging.handlers import RotatingFileHandler

from dotenv import load_dotenv

from src.constants import LOGS_DIR

LOG_FILE = LOGS_DIR / "running_logs.log"
FILE_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"


def _console_level() -> int:
    load_dotenv()
    level = logging.getLevelName(os.getenv("CFP_LOG_LEVEL", "WARNING").upper())
    return level if isinstance(level, int) else logging.WARNING


def _console_handler() -> logging.Handler:
    try:
        from rich.console import Console
        from rich.logging import RichHandler

        handler: logging.Handler = RichHandler(
            console=Console(stderr=True), rich_tracebacks=True, markup=False
        )
        handler.setFormatter(logging.Formatter("%(message)s"))
    except ImportError:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(FILE_FORMAT, datefmt="%Y-%m-%d %H:%M"))
    handler.setLevel(_console_level())
    return handler


def get_logger(name: str | None = None, headline: str | None = None) -> logging.Logger:
    """
    Returns a logger with one rotating file handler and one stderr console handler.

    Handlers are attached on first use only. A headline, when given, is written to the
    log file as a separator line every time, so each stage run is easy to find.

    Args:
        name (Optional[str]): Logger name, typically __name__.
        headline (Optional[str]): Stage or script name for the separator line.

    Returns:
        logging.Logger: Configured logger instance.
    """
    logger = logging.getLogger(name)
    logger.setLevel(logging.INFO)

    if not logger.handlers:
        file_handler = RotatingFileHandler(
            LOG_FILE,
            maxBytes=5_000_000,
            backupCount=5,
            encoding="utf-8",
        )
        file_handler.setFormatter(logging.Formatter(FILE_FORMAT, datefmt="%Y-%m-%d %H:%M"))
        logger.addHandler(file_handler)
        logger.addHandler(_console_handler())
        logger.propagate = False

    if headline:
        with open(LOG_FILE, "a", encoding="utf-8") as f:
            f.write(
                f"\n\n========================= START: {headline} "
                f"({datetime.now():%Y-%m-%d %H:%M}) =========================\n"
            )

    return logger
