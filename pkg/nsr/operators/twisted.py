# Built-in Imports
from dataclasses import dataclass, field
from typing import Sequence, Tuple

# Internal Imports
from ..exceptions import CoordinateMismatchError
from ..qseries import TruncSeries
from ..scalar import ONE, Scalar


@dataclass(frozen=True)
class TwistedSeries:
    """x^lambda * body, with lambda known through the values q^{lambda_i}."""

    qlam: Tuple[Scalar, ...]
    body: TruncSeries = field(compare=False)

    def __post_init__(self):
        object.__setattr__(self, "qlam", tuple(self.qlam))
        if len(self.qlam) != self.body.coords.n:
            raise CoordinateMismatchError(
                f"{len(self.qlam)} twist values for {self.body.coords.n} variables"
            )

    @classmethod
    def untwisted(cls, body: TruncSeries) -> "TwistedSeries":
        return cls(tuple(ONE for _ in range(body.coords.n)), body)

    @property
    def n(self) -> int:
        return self.body.coords.n

    def with_body(self, body: TruncSeries) -> "TwistedSeries":
        return TwistedSeries(self.qlam, body)

    def truncate(self, order: int) -> "TwistedSeries":
        return self.with_body(self.body.truncate(order))

    def __add__(self, other: "TwistedSeries") -> "TwistedSeries":
        self._check(other)
        return self.with_body(self.body + other.body)

    def __sub__(self, other: "TwistedSeries") -> "TwistedSeries":
        self._check(other)
        return self.with_body(self.body - other.body)

    def scale(self, c: Scalar) -> "TwistedSeries":
        return self.with_body(self.body.scale(c))

    def _check(self, other: "TwistedSeries"):
        if self.qlam != other.qlam:
            raise CoordinateMismatchError(f"twists {self.qlam} and {other.qlam} differ")

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwistedSeries):
            return NotImplemented
        return self.qlam == other.qlam and self.body == other.body

    __hash__ = None  # type: ignore[assignment]


def q_shift(F: TwistedSeries, i: int, q: Scalar) -> TruncSeries:
    """Body of T_{q,x_i}(x^lambda body) / x^lambda: weight q^{lambda_i + m_i(d)}."""
    coords = F.body.coords
    qlam = F.qlam[i - 1]
    return F.body.weight(lambda d: qlam * q ** coords.x_exponents(d)[i - 1])


def euler_weight(body: TruncSeries, i: int, lam: Sequence[Scalar]) -> TruncSeries:
    """x_i d/dx_i on x^lambda body, divided by x^lambda: weight lambda_i + m_i(d)."""
    coords = body.coords
    return body.weight(lambda d: lam[i - 1] + coords.x_exponents(d)[i - 1])
