# Built-in Import
import logging
import os
from typing import Dict, List, Optional

# Internal Imports
from ._logger import DEBUG_ENV_VAR, LOGGING_CONFIG


def debug(loggers: Optional[List[str]] = None):

    # Not provided, then get all
    if loggers is None:
        logger_config: Dict[str, Dict] = LOGGING_CONFIG["loggers"]
        loggers = [x for x in logger_config]

    # Change env variable and configurations
    os.environ[DEBUG_ENV_VAR] = os.pathsep.join(loggers)
    for logger_name in loggers:
        logging.getLogger(logger_name).setLevel(logging.DEBUG)
