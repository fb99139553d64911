"""Logger setup for nsr.

Four named loggers: ``nsr`` for the CLI, ``nsr-series`` for expansions,
``nsr-verify`` for the harness and ``nsr-worker`` for pool processes.
"""
import logging.config
import os
from typing import Any, Dict, Optional, Union

from .logger.common import HandlerFactory, IdentifierFilter
from .logger.utils import get_unique_child_name

DEBUG_ENV_VAR = "NSR_DEBUG_LOGGERS"

LOGGING_CONFIG: Dict[str, Any] = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "standard": {
            "format": "%(asctime)s [%(levelname)s] %(name)s: %(message)s",
            "datefmt": "%Y-%m-%d %H:%M:%S",
        },
    },
    "handlers": {
        "console": {
            "level": "DEBUG",
            "formatter": "standard",
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",  # stdout carries series JSON
        },
    },
    "loggers": {
        "nsr": {
            "handlers": ["console"],
            "level": "INFO",
            "propagate": True,
        },
        "nsr-series": {
            "handlers": ["console"],
            "level": "WARNING",
            "propagate": True,
        },
        "nsr-verify": {
            "handlers": ["console"],
            "level": "INFO",
            "propagate": True,
        },
        "nsr-worker": {
            "handlers": [],
            "level": "INFO",
            "propagate": True,
        },
    },
}


def setup():
    logging.config.dictConfig(LOGGING_CONFIG)


def add_identifier_filter(
    logging_entity: Union[logging.Logger, logging.Handler], identifier: str
):
    """Stamp ``identifier`` (a check name and N) on every record."""
    logging_entity.addFilter(IdentifierFilter(identifier))


def fork(
    logger: logging.Logger, name: str, identifier: Optional[str] = None
) -> logging.Logger:
    """Child logger for one check run.

    Args:
        logger: The parent, usually ``nsr-verify``.
        name: The check name; suffixed if a sibling already took it.
        identifier: Stamped on every record for the ``console-check`` formatter.

    Returns:
        The child logger, at the parent's level.
    """

    name = get_unique_child_name(logger, name)
    new_logger = logger.getChild(name)
    new_logger.setLevel(logger.level)

    if identifier:
        add_identifier_filter(new_logger, identifier)

    return new_logger


def getLogger(name: str) -> logging.Logger:
    """The named logger, at DEBUG if listed in ``NSR_DEBUG_LOGGERS``."""
    logger = logging.getLogger(name)
    debug_loggers = os.environ.get(DEBUG_ENV_VAR, "").split(os.pathsep)
    if name in debug_loggers:
        logger.setLevel(logging.DEBUG)

    return logger


def add_file_handler(logger: logging.Logger, filename: str) -> logging.Handler:
    """Attach a rotating file handler, used by ``nsr --log-file``."""
    handler = HandlerFactory.get("rotating-file", filename=filename)
    logger.addHandler(handler)
    return handler
