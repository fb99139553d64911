# Built-in Imports
from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

# Internal Imports
from .partition import EMPTY, Partition
from .tuples import DegreeVector, PartitionTuple, enumerate_tuples, tuples_by_degree


@dataclass(frozen=True)
class DominantWeight:
    """Level ``level`` dominant integrable weight labelled by ``mu``."""

    n: int
    level: int
    mu: Partition = EMPTY

    def __post_init__(self):
        if self.level < 0:
            raise ValueError(f"negative level {self.level}")
        if self.mu.length > self.n:
            raise ValueError(f"mu={self.mu} has more than N={self.n} parts")
        if self.level + self.mu_padded[-1] - self.mu_padded[0] < 0:
            raise ValueError(f"K + mu_N - mu_1 < 0 for K={self.level}, mu={self.mu}")

    @property
    def mu_padded(self) -> Tuple[int, ...]:
        return tuple(self.mu.part(i) for i in range(1, self.n + 1))

    def bounds(self) -> Tuple[int, ...]:
        """Allowed row differences: index 0 is the wrap-around bound."""
        mu = self.mu_padded
        return (self.level + mu[-1] - mu[0],) + tuple(
            mu[j] - mu[j + 1] for j in range(self.n - 1)
        )


def is_gt_pattern(T: PartitionTuple, w: DominantWeight) -> bool:
    """Interlacing test of an affine Gelfand-Tsetlin pattern of weight ``w``."""
    n = w.n
    if T.n != n:
        raise ValueError(f"tuple of length {T.n} against weight of rank {n}")
    wrap, *steps = w.bounds()
    rows = max((c.length for c in T.components), default=0)
    for alpha in range(1, rows + 1):
        if T.component(n).part(alpha) - T.component(1).part(alpha) > wrap:
            return False
        for j in range(1, n):
            if T.component(j).part(alpha) - T.component(j + 1).part(alpha) > steps[j - 1]:
                return False
    return True


def gt_patterns(w: DominantWeight, d: Sequence[int]) -> Tuple[PartitionTuple, ...]:
    return tuple(T for T in enumerate_tuples(w.n, d) if is_gt_pattern(T, w))


def count_gt_patterns(w: DominantWeight, d: Sequence[int]) -> int:
    return len(gt_patterns(w, d))


def gt_counts(w: DominantWeight, max_size: int) -> Dict[DegreeVector, int]:
    """Pattern counts for every degree vector of total size up to ``max_size``."""
    counts: Dict[DegreeVector, int] = {}
    for size in range(max_size + 1):
        for d, tuples in tuples_by_degree(w.n, size).items():
            hits = sum(1 for T in tuples if is_gt_pattern(T, w))
            if hits:
                counts[d] = hits
    return counts
