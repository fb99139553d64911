# Built-in Imports
import functools
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

# Internal Imports
from .. import _logger, config
from ..exceptions import ResourceCapError
from .partition import EMPTY, Partition, enumerate_partitions

logger: logging.Logger = _logger.getLogger("nsr-series")

DegreeVector = Tuple[int, ...]


@dataclass(frozen=True)
class PartitionTuple:
    """N-tuple of partitions with cyclic component access."""

    components: Tuple[Partition, ...]

    def __post_init__(self):
        if len(self.components) < 1:
            raise ValueError("a partition tuple needs at least one component")
        object.__setattr__(
            self,
            "components",
            tuple(c if isinstance(c, Partition) else Partition(tuple(c)) for c in self.components),
        )

    @classmethod
    def empty(cls, n: int) -> "PartitionTuple":
        return cls(tuple(EMPTY for _ in range(n)))

    @classmethod
    def of(cls, *components: Sequence[int]) -> "PartitionTuple":
        return cls(tuple(Partition(tuple(c)) for c in components))

    @classmethod
    def parse(cls, text: str) -> "PartitionTuple":
        """Parse ``"2,1|-|1"``: components separated by ``|``, ``-`` for empty."""
        return cls(tuple(Partition.parse(chunk) for chunk in text.split("|")))

    @property
    def n(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return sum(c.size for c in self.components)

    def component(self, i: int) -> Partition:
        """Cyclic 1-indexed access: component(i + N) == component(i)."""
        return self.components[(i - 1) % self.n]

    def degree_vector(self) -> DegreeVector:
        return degree_vector(self)

    def m_vector(self) -> Tuple[int, ...]:
        return m_vector(self)

    def rotate(self, steps: int = 1) -> "PartitionTuple":
        """Shift components left, so that the degree vector shifts left too."""
        k = steps % self.n
        return PartitionTuple(self.components[k:] + self.components[:k])

    def __str__(self) -> str:
        return "|".join(",".join(str(x) for x in c.parts) or "-" for c in self.components)


def degree_vector(T: PartitionTuple) -> DegreeVector:
    """Row alpha of component beta feeds y-index (alpha + beta - 1) mod N."""
    n = T.n
    d = [0] * n
    for beta, comp in enumerate(T.components, start=1):
        for alpha, row in enumerate(comp.parts, start=1):
            d[(alpha + beta - 2) % n] += row
    return tuple(d)


def m_from_degree(d: Sequence[int]) -> Tuple[int, ...]:
    """x-exponents m_i = d_{i-1} - d_i with cyclic indices."""
    n = len(d)
    return tuple(d[(i - 1) % n] - d[i] for i in range(n))


def m_vector(T: PartitionTuple) -> Tuple[int, ...]:
    return m_from_degree(degree_vector(T))


def is_uniform(d: Sequence[int]) -> bool:
    return all(x == d[0] for x in d)


def rotate_key(d: Sequence[int], steps: int = 1) -> DegreeVector:
    k = steps % len(d)
    return tuple(d[k:]) + tuple(d[:k])


def _compositions(total: int, parts: int):
    """Weak compositions of ``total`` into ``parts`` pieces, largest first piece first."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _check_cap(size: int):
    cap = config.get("partition.max-total-size")
    if size > cap:
        raise ResourceCapError(f"tuple enumeration of size {size} exceeds cap {cap}")


@functools.lru_cache(maxsize=None)
def enumerate_tuples_of_size(n: int, size: int) -> Tuple[PartitionTuple, ...]:
    """All N-tuples with total size ``size``, in a deterministic order."""
    _check_cap(size)
    result: List[PartitionTuple] = []
    for sizes in _compositions(size, n):
        for comps in itertools.product(*(enumerate_partitions(s) for s in sizes)):
            result.append(PartitionTuple(tuple(comps)))
    logger.debug(f"enumerated {len(result)} tuples of size {size} for N={n}")
    return tuple(result)


@functools.lru_cache(maxsize=None)
def tuples_by_degree(n: int, size: int) -> Dict[DegreeVector, Tuple[PartitionTuple, ...]]:
    grouped: Dict[DegreeVector, List[PartitionTuple]] = {}
    for T in enumerate_tuples_of_size(n, size):
        grouped.setdefault(T.degree_vector(), []).append(T)
    return {d: tuple(ts) for d, ts in grouped.items()}


def enumerate_tuples(n: int, d: Sequence[int]) -> Tuple[PartitionTuple, ...]:
    """Exactly the tuples whose degree vector is ``d``."""
    if n < 2:
        raise ValueError(f"N must be at least 2, got {n}")
    d = tuple(d)
    if len(d) != n or any(x < 0 for x in d):
        raise ValueError(f"invalid degree vector {d} for N={n}")
    return tuples_by_degree(n, sum(d)).get(d, ())


####################################################################
## Cylindric collections
####################################################################

Cylindric = Dict[Tuple[int, int], Partition]


def _cylindric_row(k: int, l: int, i: int, n: int) -> int:
    # Row of component l that feeds the i-th part of lambda^{kl}
    return n * (i - 1) - n * ((k - l) // n) + k - l + 1


def to_cylindric(T: PartitionTuple) -> Tuple[Cylindric, bool]:
    """Redistribute the rows of T into the collection ``(k, l) -> lambda^{kl}``.

    Returns the collection and whether every column chain
    ``lambda^{ll} > lambda^{l+1,l} > ... > lambda^{l-1,l}`` holds, closed by the
    shifted containment of the last member into the first.
    """
    n = T.n
    collection: Cylindric = {}
    for l in range(1, n + 1):
        comp = T.component(l)
        for k in range(1, n + 1):
            rows = []
            i = 1
            while True:
                row = _cylindric_row(k, l, i, n)
                if row > comp.length:
                    break
                rows.append(comp.part(row))
                i += 1
            collection[(k, l)] = Partition(tuple(rows))
    return collection, cylindric_chains_hold(collection, n)


def cylindric_chains_hold(collection: Cylindric, n: int) -> bool:
    for l in range(1, n + 1):
        chain = [collection[(((l - 1 + j) % n) + 1, l)] for j in range(n)]
        for upper, lower in zip(chain, chain[1:]):
            if not upper.contains(lower):
                return False
        if not chain[-1].contains(chain[0], shift=1):
            return False
    return True


def from_cylindric(collection: Cylindric, n: int) -> PartitionTuple:
    """Inverse of :func:`to_cylindric`."""
    components = []
    for l in range(1, n + 1):
        rows: Dict[int, int] = {}
        for k in range(1, n + 1):
            for i, value in enumerate(collection[(k, l)].parts, start=1):
                rows[_cylindric_row(k, l, i, n)] = value
        length = max(rows) if rows else 0
        components.append(Partition(tuple(rows.get(r, 0) for r in range(1, length + 1))))
    return PartitionTuple(tuple(components))


def cylindric_degree(collection: Cylindric, n: int) -> DegreeVector:
    """d_k = sum over l of |lambda^{kl}|; agrees with :func:`degree_vector`."""
    return tuple(sum(collection[(k, l)].size for l in range(1, n + 1)) for k in range(1, n + 1))
