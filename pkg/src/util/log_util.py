"""
Logging setup for the command line front end.

Library modules only ever do ``logger = logging.getLogger(__name__)``;
handlers are installed here, once, by main.py. Diagnostics go to standard
error so standard output carries nothing but the report.
"""

import logging
import sys
from typing import Optional, TextIO

LOG_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"
ROOT_LOGGER = "src"


def configure_logging(level: str = "WARNING", stream: Optional[TextIO] = None) -> logging.Logger:
    """
    Attach a single stderr handler to the package logger.

    Args:
        level: Logging level name ("DEBUG", "INFO", "WARNING", ...)
        stream: Target stream, standard error when omitted

    Returns:
        logging.Logger: The configured package logger

    Calling this twice replaces the previous handler instead of stacking a
    second one.
    """
    logger = logging.getLogger(ROOT_LOGGER)
    for handler in list(logger.handlers):
        if getattr(handler, "_fusionkk", False):
            logger.removeHandler(handler)

    handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler._fusionkk = True  # type: ignore[attr-defined]
    logger.addHandler(handler)
    logger.setLevel(level.upper())
    return logger
