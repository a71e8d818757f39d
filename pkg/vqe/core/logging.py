"""
Logging utilities for the CLI, the services and the scan workers.

Provides a consistent logging format and configuration.
"""

import logging
import sys

LOG_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"

# Third-party loggers that would otherwise flood DEBUG runs.
_NOISY_LOGGERS = ("asyncio",)


def configure_logging(level: str = "INFO", *, force: bool = False) -> None:
    """Configure root logging with the shared pipe-delimited format."""
    logging.basicConfig(
        level=level.upper(),
        format=LOG_FORMAT,
        stream=sys.stdout,
        force=force,
    )
    for name in _NOISY_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING)


__all__ = ["LOG_FORMAT", "configure_logging"]
