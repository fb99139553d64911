import os
import pathlib
import shutil
from typing import Dict

from nsr.qseries import CoordSystem, TruncSeries


def cleanup_and_recreate_dir(directory: pathlib.Path):
    """Cleanup a directory tree and recreate it."""
    shutil.rmtree(directory, ignore_errors=True)
    os.makedirs(directory, exist_ok=True)


def series(n: int, order: int, coeffs: Dict) -> TruncSeries:
    """Cyclic series from a ``{key: value}`` literal."""
    return TruncSeries(CoordSystem.cyclic(n), order, coeffs)


def unit(n: int, i: int):
    """Key of y_i alone."""
    return tuple(1 if a == i - 1 else 0 for a in range(n))
