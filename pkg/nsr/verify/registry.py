# Built-in Imports
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Tuple

# Internal Imports
from .context import CheckContext


class CheckKind(Enum):
    PROVEN = "proven"
    CONJECTURE = "conjecture"


CheckFn = Callable[[CheckContext], None]


@dataclass(frozen=True)
class CheckEntry:
    """A named identity check.

    ``orders`` are the default truncation orders for N = 2 and for N >= 3;
    ``batch`` multiplies the requested trials for cheap randomized checks.
    """

    name: str
    kind: CheckKind
    fn: CheckFn
    orders: Tuple[int, int] = (4, 3)
    sigma_order: int = 2
    min_n: int = 2
    suite_ns: Tuple[int, ...] = (2, 3)
    batch: int = 1
    description: str = field(default="", compare=False)

    def default_order(self, n: int) -> int:
        return self.orders[0] if n == 2 else self.orders[1]


REGISTRY: Dict[str, CheckEntry] = {}


def register(name: str, kind: CheckKind, **options) -> Callable[[CheckFn], CheckFn]:
    def decorator(fn: CheckFn) -> CheckFn:
        if name in REGISTRY:
            raise ValueError(f"check {name!r} registered twice")
        doc = (fn.__doc__ or "").strip().splitlines()
        REGISTRY[name] = CheckEntry(name, kind, fn, description=doc[0] if doc else "", **options)
        return fn

    return decorator


def get_entry(name: str) -> CheckEntry:
    # Populates REGISTRY on first use
    from . import checks  # noqa: F401

    return REGISTRY[name]


def all_entries() -> Dict[str, CheckEntry]:
    from . import checks  # noqa: F401

    return dict(sorted(REGISTRY.items()))
