import logging


def get_unique_child_name(logger: logging.Logger, name: str) -> str:
    """``name``, or ``name_1``, ``name_2``... if ``<logger>.<name>`` exists already.

    Two runs of the same check under one parent get separate children.
    """
    candidate, j = name, 1
    while f"{logger.name}.{candidate}" in logging.root.manager.loggerDict:
        candidate = f"{name}_{j}"
        j += 1
    return candidate
