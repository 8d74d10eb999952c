"""Logging configuration for the Genetic Fuzzy Airfoil Toolkit."""

import logging
from datetime import datetime
from pathlib import Path
from typing import Optional, Union

from rich.logging import RichHandler


def setup_logger(
    name: str = "gfs",
    level: int = logging.INFO,
    log_dir: Optional[Union[str, Path]] = "logs",
) -> logging.Logger:
    """
    Set up logger with both console (Rich) and file handlers.

    Args:
        name: Logger name
        level: Logging level (default: INFO)
        log_dir: Directory for the daily log files; None disables file logging

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)
    logger.setLevel(level)

    # Prevent duplicate handlers
    if logger.handlers:
        return logger

    console_handler = RichHandler(
        rich_tracebacks=True,
        markup=False,
        show_time=True,
        show_path=False
    )
    console_handler.setLevel(level)
    console_handler.setFormatter(logging.Formatter("%(message)s", datefmt="[%X]"))
    logger.addHandler(console_handler)

    if log_dir is None:
        return logger

    log_path = Path(log_dir)
    log_path.mkdir(parents=True, exist_ok=True)

    today = datetime.now().strftime("%Y%m%d")
    file_format = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S"
    )

    file_handler = logging.FileHandler(log_path / f"gfs_{today}.log", encoding='utf-8')
    file_handler.setLevel(logging.DEBUG)
    file_handler.setFormatter(file_format)

    error_handler = logging.FileHandler(log_path / f"errors_{today}.log", encoding='utf-8')
    error_handler.setLevel(logging.ERROR)
    error_handler.setFormatter(file_format)

    logger.addHandler(file_handler)
    logger.addHandler(error_handler)

    return logger


def get_logger(name: str = "gfs") -> logging.Logger:
    """Get or create logger instance.

    Module loggers (``src.*``) are re-parented under the ``gfs`` logger so a
    single ``setup_logger()`` call configures the whole package.
    """
    if name.startswith("src."):
        name = "gfs." + name[len("src."):]
    return logging.getLogger(name)
