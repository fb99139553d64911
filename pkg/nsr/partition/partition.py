# Built-in Imports
import functools
from dataclasses import dataclass
from typing import Iterator, Tuple

# Third-party Imports
from sympy.utilities.iterables import partitions as _sympy_partitions


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing sequence of positive integers (trailing zeros dropped)."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts {parts} are not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip().strip("()[]")
        if text in {"", "-"}:
            return cls(())
        return cls(tuple(int(x) for x in text.split(",") if x.strip()))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th part, 1-indexed, zero beyond the length."""
        if 1 <= i <= len(self.parts):
            return self.parts[i - 1]
        return 0

    def conjugate(self) -> "Partition":
        return _conjugate(self)

    def boxes(self) -> Iterator[Tuple[int, int]]:
        """Cells (row, column), both 1-indexed."""
        for i, row in enumerate(self.parts, start=1):
            for j in range(1, row + 1):
                yield (i, j)

    def contains(self, other: "Partition", shift: int = 0) -> bool:
        """``self_i >= other_{i+shift}`` for every row i."""
        rows = max(self.length, other.length) + 1
        return all(self.part(i) >= other.part(i + shift) for i in range(1, rows + 1))

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.parts) + ")"


EMPTY = Partition(())


@functools.lru_cache(maxsize=None)
def _conjugate(p: Partition) -> Partition:
    if not p.parts:
        return EMPTY
    return Partition(
        tuple(sum(1 for row in p.parts if row >= j) for j in range(1, p.parts[0] + 1))
    )


@functools.lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> Tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order, ``(n)`` first."""
    if n < 0:
        raise ValueError(f"cannot partition {n}")
    if n == 0:
        return (EMPTY,)
    result = []
    for multiplicities in _sympy_partitions(n):
        parts = []
        for value in sorted(multiplicities, reverse=True):
            parts.extend([value] * multiplicities[value])
        result.append(Partition(tuple(parts)))
    result.sort(key=lambda p: p.parts, reverse=True)
    return tuple(result)


def partition_count(n: int) -> int:
    return len(enumerate_partitions(n))
