from __future__ import annotations

"""
Centralised logging configuration for the toolkit.
"""

import logging
from typing import Optional

LEVELS = {
    "CRITICAL": logging.CRITICAL,
    "ERROR": logging.ERROR,
    "WARNING": logging.WARNING,
    "INFO": logging.INFO,
    "DEBUG": logging.DEBUG,
}


def configure_logging(level: int = logging.WARNING) -> None:
    """Configure the root logger (stderr) with a simple formatter."""
    root = logging.getLogger()
    if root.handlers:
        # Preserve existing configuration (pytest installs its own handlers)
        root.setLevel(level)
        return

    logging.basicConfig(
        level=level,
        format="%(asctime)s | %(levelname)s | %(name)s | %(message)s",
    )


def parse_log_level(level: Optional[str]) -> int:
    """Map a level name to its numeric value, defaulting to WARNING."""
    if not level:
        return logging.WARNING
    return LEVELS.get(level.upper(), logging.WARNING)


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """Shortcut for fetching a module logger."""
    return logging.getLogger(name if name else "tdpairs")


__all__ = ["configure_logging", "parse_log_level", "get_logger"]
