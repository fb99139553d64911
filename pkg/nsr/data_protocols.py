import datetime
from dataclasses import dataclass, field
from typing import Any, Dict, Sequence

from dataclasses_json import DataClassJsonMixin

from .scalar import format_scalar


@dataclass
class Witness(DataClassJsonMixin):
    key: str
    lhs: str
    rhs: str

    @classmethod
    def of(cls, key: Any, lhs: Any, rhs: Any) -> "Witness":
        return cls(key=format_key(key), lhs=_text(lhs), rhs=_text(rhs))


@dataclass
class CheckDiagnostics(DataClassJsonMixin):
    timestamp: str = field(
        default_factory=lambda: str(datetime.datetime.now().isoformat())
    )  # ISO str
    wall_ms: float = 0  # ms
    memory_usage: float = 0  # KB
    cpu_usage: float = 0  # percentage
    retries: int = 0

    def as_row(self) -> Dict[str, Any]:
        return {
            "timestamp": self.timestamp,
            "wall(ms)": self.wall_ms,
            "memory_usage(KB)": self.memory_usage,
            "cpu_usage(%)": self.cpu_usage,
            "retries(int)": self.retries,
        }


def format_key(key: Any) -> str:
    if isinstance(key, str):
        return key
    if isinstance(key, Sequence):
        return "(" + ",".join(str(k) for k in key) + ")"
    return str(key)


def _text(value: Any) -> str:
    return value if isinstance(value, str) else format_scalar(value)
