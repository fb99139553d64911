# Built-in Imports
import functools
from dataclasses import dataclass
from typing import Sequence, Tuple

# Third-party Imports
from dataclasses_json import DataClassJsonMixin

# Internal Imports
from ..exceptions import CoordinateMismatchError, DegreeConstraintError
from ..scalar import ONE, Scalar

Key = Tuple[int, ...]

CYCLIC = "cyclic"
FINITE = "finite"
NOME = "nome"


@dataclass(frozen=True)
class CoordSystem(DataClassJsonMixin):
    """Expansion variables of a truncated series.

    ``cyclic``: y_i = p x_{i+1}/x_i for i mod N, so prod y_i = P = p^N.
    ``finite``: z_i = x_{i+1}/x_i for i = 1..N-1, no p.
    ``nome``: the single variable P.
    """

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in {CYCLIC, FINITE, NOME}:
            raise ValueError(f"unknown coordinate kind {self.kind!r}")
        if self.kind != NOME and self.n < 2:
            raise ValueError(f"{self.kind} coordinates need N >= 2, got {self.n}")

    @classmethod
    def cyclic(cls, n: int) -> "CoordSystem":
        return cls(CYCLIC, n)

    @classmethod
    def finite(cls, n: int) -> "CoordSystem":
        return cls(FINITE, n)

    @classmethod
    def nome(cls, n: int = 1) -> "CoordSystem":
        return cls(NOME, n)

    @property
    def arity(self) -> int:
        if self.kind == CYCLIC:
            return self.n
        if self.kind == FINITE:
            return self.n - 1
        return 1

    @property
    def zero(self) -> Key:
        return (0,) * self.arity

    def require(self, kind: str):
        if self.kind != kind:
            raise CoordinateMismatchError(f"expected {kind} coordinates, got {self.kind}")

    def x_exponents(self, d: Sequence[int]) -> Key:
        """x-exponents of the monomial with key d."""
        if self.kind == CYCLIC:
            return tuple(d[(i - 1) % self.n] - d[i] for i in range(self.n))
        if self.kind == FINITE:
            padded = (0,) + tuple(d) + (0,)
            return tuple(padded[i] - padded[i + 1] for i in range(self.n))
        raise CoordinateMismatchError("nome coordinates carry no x-exponents")

    def is_uniform(self, d: Sequence[int]) -> bool:
        if self.kind == FINITE:
            return not any(d)
        return all(x == d[0] for x in d)

    def uniform(self, k: int) -> Key:
        if self.kind == FINITE:
            raise CoordinateMismatchError("finite coordinates have no P")
        return (k,) * self.arity

    def full(self) -> Key:
        return self.uniform(1)

    def arc(self, i: int, j: int) -> Key:
        """Key of p^{j-i} x_j/x_i (cyclic) or x_j/x_i (finite), 1 <= i < j <= N."""
        if self.kind == NOME or not 1 <= i < j <= self.n:
            raise DegreeConstraintError(f"no arc ({i}, {j}) in {self.kind} coordinates")
        return tuple(1 if i - 1 <= a < j - 1 else 0 for a in range(self.arity))

    def coarc(self, i: int, j: int) -> Key:
        """Key of p^{N-j+i} x_i/x_j, 1 <= i <= j <= N; ``coarc(i, i)`` is P."""
        self.require(CYCLIC)
        if i == j:
            return self.full()
        return tuple(1 - e for e in self.arc(i, j))

    def keys(self, order: int) -> Tuple[Key, ...]:
        return _keys(self.arity, order)


@functools.lru_cache(maxsize=None)
def _keys(arity: int, order: int) -> Tuple[Key, ...]:
    """All keys of total degree <= order, by degree then lexicographically."""
    result = []
    for total in range(order + 1):
        result.extend(sorted(_weak_compositions(total, arity)))
    return tuple(result)


def _weak_compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def key_degree(d: Sequence[int]) -> int:
    return sum(d)


def add_keys(a: Sequence[int], b: Sequence[int]) -> Key:
    return tuple(x + y for x, y in zip(a, b))


def scale_key(a: Sequence[int], k: int) -> Key:
    return tuple(k * x for x in a)


@dataclass(frozen=True)
class Monomial:
    """``prefactor * y^exponents``."""

    prefactor: Scalar
    exponents: Key

    @classmethod
    def of(cls, exponents: Sequence[int], prefactor: Scalar = ONE) -> "Monomial":
        return cls(prefactor, tuple(exponents))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.prefactor * other.prefactor, add_keys(self.exponents, other.exponents))

    def scale(self, c: Scalar) -> "Monomial":
        return Monomial(self.prefactor * c, self.exponents)

    def power(self, k: int) -> "Monomial":
        return Monomial(self.prefactor**k, scale_key(self.exponents, k))
