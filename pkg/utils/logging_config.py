"""
Logging setup for PolarBox
"""
import logging
import sys

from config import APP_NAME, LOG_FORMAT, LOG_LEVEL

PACKAGE_LOGGERS = ['utils', 'representation', 'conversion', 'polarity', 'commands', APP_NAME]

_configured = False


def setup_logging(level: str = LOG_LEVEL) -> None:
    """Route every package logger to a single stderr handler"""
    global _configured
    numeric = getattr(logging, str(level).upper(), logging.WARNING)

    if not _configured:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        for name in PACKAGE_LOGGERS:
            package_logger = logging.getLogger(name)
            package_logger.addHandler(handler)
            package_logger.propagate = False
        _configured = True

    for name in PACKAGE_LOGGERS:
        logging.getLogger(name).setLevel(numeric)


def level_for_verbosity(verbosity: int) -> str:
    """Map repeated -v flags onto a level name"""
    if verbosity >= 2:
        return "DEBUG"
    if verbosity == 1:
        return "INFO"
    return LOG_LEVEL
