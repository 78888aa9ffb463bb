from __future__ import annotations

import sys

from loguru import logger

LOG_FORMAT = "<level>{level: <8}</level> | {name}:{function} - {message}"


def configure_logging(verbose: bool = False) -> None:
    """Route log records to stderr only; stdout carries the summaries."""
    logger.remove()
    logger.add(
        sys.stderr,
        level="DEBUG" if verbose else "INFO",
        format=LOG_FORMAT,
    )
