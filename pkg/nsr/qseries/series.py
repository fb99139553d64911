# Built-in Imports
import logging
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Tuple

# Internal Imports
from .. import _logger
from ..exceptions import CoordinateMismatchError, PoleError, SeriesInversionError
from ..scalar import ONE, ZERO, RatFunc, Scalar, divide, evaluate, num_den
from .coords import NOME, CoordSystem, Key, Monomial, add_keys

logger: logging.Logger = _logger.getLogger("nsr-series")

ScalarLike = (int, Fraction, RatFunc)


class TruncSeries:
    """Power series in the variables of ``coords``, truncated at total degree ``trunc``.

    Coefficients are exact scalars, zero coefficients are never stored and no key
    beyond the truncation order is ever created.
    """

    __slots__ = ("coords", "trunc", "_coeffs")

    def __init__(
        self,
        coords: CoordSystem,
        trunc: int,
        coeffs: Optional[Mapping[Key, Scalar]] = None,
    ):
        if trunc < 0:
            raise ValueError(f"negative truncation order {trunc}")
        self.coords = coords
        self.trunc = trunc
        self._coeffs: Dict[Key, Scalar] = {}
        arity = coords.arity
        for key, value in (coeffs or {}).items():
            key = tuple(key)
            if len(key) != arity:
                raise CoordinateMismatchError(f"key {key} has arity {len(key)}, expected {arity}")
            if sum(key) <= trunc and value:
                self._coeffs[key] = value

    ####################################################################
    ## Constructors
    ####################################################################

    @classmethod
    def zero(cls, coords: CoordSystem, trunc: int) -> "TruncSeries":
        return cls(coords, trunc)

    @classmethod
    def one(cls, coords: CoordSystem, trunc: int) -> "TruncSeries":
        return cls(coords, trunc, {coords.zero: ONE})

    @classmethod
    def constant(cls, coords: CoordSystem, trunc: int, value: Scalar) -> "TruncSeries":
        return cls(coords, trunc, {coords.zero: value})

    @classmethod
    def monomial(cls, coords: CoordSystem, trunc: int, w: Monomial) -> "TruncSeries":
        return cls(coords, trunc, {w.exponents: w.prefactor})

    ####################################################################
    ## Access
    ####################################################################

    def coefficient(self, key: Iterable[int]) -> Scalar:
        return self._coeffs.get(tuple(key), ZERO)

    def __getitem__(self, key: Iterable[int]) -> Scalar:
        return self.coefficient(key)

    def items(self) -> List[Tuple[Key, Scalar]]:
        """Terms sorted by degree then lexicographically."""
        return sorted(self._coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def support(self) -> List[Key]:
        return [k for k, _ in self.items()]

    def constant_term(self) -> Scalar:
        return self.coefficient(self.coords.zero)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def is_uniform(self) -> bool:
        return all(self.coords.is_uniform(k) for k in self._coeffs)

    def non_uniform_keys(self) -> List[Key]:
        return [k for k in self.support() if not self.coords.is_uniform(k)]

    def nome_coefficients(self) -> List[Scalar]:
        """Coefficients at P^0, P^1, ... up to the truncation order."""
        arity = self.coords.arity
        return [self.coefficient((k,) * arity) for k in range(self.trunc // arity + 1)]

    ####################################################################
    ## Ring structure
    ####################################################################

    def _check(self, other: "TruncSeries"):
        if self.coords != other.coords:
            raise CoordinateMismatchError(f"{self.coords} vs {other.coords}")

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.coords, min(order, self.trunc), self._coeffs)

    def __add__(self, other):
        if isinstance(other, ScalarLike):
            other = TruncSeries.constant(self.coords, self.trunc, other)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check(other)
        result = dict(self._coeffs)
        for key, value in other._coeffs.items():
            result[key] = result.get(key, ZERO) + value
        return TruncSeries(self.coords, min(self.trunc, other.trunc), result)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.coords, self.trunc, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, (TruncSeries,) + ScalarLike):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "TruncSeries":
        if not c:
            return TruncSeries.zero(self.coords, self.trunc)
        return TruncSeries(self.coords, self.trunc, {k: v * c for k, v in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, ScalarLike):
            return self.scale(other)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check(other)
        order = min(self.trunc, other.trunc)
        left = [(k, v, sum(k)) for k, v in self._coeffs.items() if sum(k) <= order]
        right = sorted(
            ((k, v, sum(k)) for k, v in other._coeffs.items() if sum(k) <= order),
            key=lambda item: item[2],
        )
        result: Dict[Key, Scalar] = {}
        for ka, va, da in left:
            room = order - da
            for kb, vb, db in right:
                if db > room:
                    break
                key = add_keys(ka, kb)
                result[key] = result.get(key, ZERO) + va * vb
        return TruncSeries(self.coords, order, result)

    def __rmul__(self, other):
        if isinstance(other, ScalarLike):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, ScalarLike):
            return self.scale(divide(ONE, other))
        if isinstance(other, TruncSeries):
            return self * other.invert()
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.invert()
        result = TruncSeries.one(self.coords, self.trunc)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def invert(self) -> "TruncSeries":
        c0 = self.constant_term()
        if not c0:
            raise SeriesInversionError("constant term is zero")
        inv0 = ONE / c0
        rest = [(k, v) for k, v in self._coeffs.items() if any(k)]
        result: Dict[Key, Scalar] = {self.coords.zero: inv0}
        for key in self.coords.keys(self.trunc)[1:]:
            acc: Scalar = ZERO
            for k, v in rest:
                if all(a <= b for a, b in zip(k, key)):
                    prev = result.get(tuple(b - a for a, b in zip(k, key)))
                    if prev is not None:
                        acc = acc + v * prev
            if acc:
                result[key] = -acc * inv0
        return TruncSeries(self.coords, self.trunc, result)

    def pow_rational(self, beta: Scalar) -> "TruncSeries":
        """Binomial series (1 + u)^beta; the constant term must be 1."""
        if self.constant_term() != 1:
            raise SeriesInversionError(
                f"rational power needs constant term 1, got {self.constant_term()}"
            )
        u = self - 1
        result = TruncSeries.one(self.coords, self.trunc)
        term = TruncSeries.one(self.coords, self.trunc)
        binom: Scalar = ONE
        for k in range(1, self.trunc + 1):
            term = term * u
            if term.is_zero():
                break
            binom = binom * (beta - (k - 1)) / k
            result = result + term.scale(binom)
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, ScalarLike):
            other = TruncSeries.constant(self.coords, self.trunc, other)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.coords == other.coords and self._coeffs == other._coeffs

    __hash__ = None  # type: ignore[assignment]

    ####################################################################
    ## Coefficient-wise maps
    ####################################################################

    def weight(self, fn: Callable[[Key], Scalar]) -> "TruncSeries":
        """Diagonal action: multiply the coefficient at d by ``fn(d)``."""
        return TruncSeries(self.coords, self.trunc, {k: v * fn(k) for k, v in self._coeffs.items()})

    def restrict(self, predicate: Callable[[Key], bool]) -> "TruncSeries":
        return TruncSeries(
            self.coords, self.trunc, {k: v for k, v in self._coeffs.items() if predicate(k)}
        )

    def uniform_part(self) -> "TruncSeries":
        return self.restrict(self.coords.is_uniform)

    def p_derivative(self) -> "TruncSeries":
        """p d/dp: weight |d| on cyclic keys (P d/dP on nome keys)."""
        if self.coords.kind == NOME:
            return self.weight(lambda k: Fraction(k[0]))
        self.coords.require("cyclic")
        return self.weight(lambda k: Fraction(sum(k)))

    def rotate(self, steps: int = 1) -> "TruncSeries":
        """Relabel y_i -> y_{i-steps}; keys shift left like rotated tuples."""
        self.coords.require("cyclic")
        n = self.coords.n
        s = steps % n
        return TruncSeries(
            self.coords, self.trunc, {k[s:] + k[:s]: v for k, v in self._coeffs.items()}
        )

    def evaluate(self, point: Fraction) -> "TruncSeries":
        """Specialize the symbolic generator in every coefficient."""
        result = {}
        for key, value in self._coeffs.items():
            try:
                result[key] = evaluate(value, point)
            except PoleError as e:
                raise PoleError(str(e), point=point, key=key) from e
        return TruncSeries(self.coords, self.trunc, result)

    def to_nome(self) -> "TruncSeries":
        """View a P-only series in nome coordinates."""
        if self.coords.kind == NOME:
            return self
        bad = self.non_uniform_keys()
        if bad:
            raise CoordinateMismatchError(f"key {bad[0]} is not a power of P")
        arity = self.coords.arity
        return TruncSeries(
            CoordSystem.nome(self.coords.n),
            self.trunc // arity,
            {(k[0],): v for k, v in self._coeffs.items()},
        )

    def lift(self, coords: CoordSystem) -> "TruncSeries":
        """Embed a nome series into ``coords`` as a series in P = prod y_i."""
        self.coords.require(NOME)
        return TruncSeries(
            coords,
            self.trunc * coords.arity,
            {coords.uniform(k[0]): v for k, v in self._coeffs.items()},
        )

    ####################################################################
    ## Serialization
    ####################################################################

    def to_dict(self) -> Dict[str, Any]:
        terms = []
        for key, value in self.items():
            num, den = num_den(value)
            terms.append({"d": list(key), "num": num, "den": den})
        return {"coords": self.coords.to_dict(), "trunc": self.trunc, "terms": terms}

    def __repr__(self) -> str:
        head = ", ".join(f"{k}: {v}" for k, v in self.items()[:6])
        more = "" if len(self) <= 6 else ", ..."
        return f"TruncSeries({self.coords.kind}{self.coords.n}, D={self.trunc}, {{{head}{more}}})"


def first_difference(
    a: TruncSeries, b: TruncSeries
) -> Optional[Tuple[Key, Scalar, Scalar]]:
    """The lowest key where two series disagree, with both coefficients."""
    keys = sorted(set(a.support()) | set(b.support()), key=lambda k: (sum(k), k))
    for key in keys:
        if a.coefficient(key) != b.coefficient(key):
            return key, a.coefficient(key), b.coefficient(key)
    return None
