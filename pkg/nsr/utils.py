import pathlib
import time
from typing import Tuple


def elapsed_ms(start: float) -> float:
    """Milliseconds since ``start``, a ``time.perf_counter()`` reading."""
    return (time.perf_counter() - start) * 1000


def split_assignment(text: str) -> Tuple[str, str]:
    """Split ``"q=1/3"`` into ``("q", "1/3")``."""
    name, sep, value = text.partition("=")
    if not sep or not name.strip():
        raise ValueError(f"expected name=value, got {text!r}")
    return name.strip(), value.strip()


def output_location(path: pathlib.Path) -> Tuple[pathlib.Path, str]:
    """Directory and file stem of a requested output file."""
    path = pathlib.Path(path)
    return path.parent if str(path.parent) else pathlib.Path("."), path.stem
