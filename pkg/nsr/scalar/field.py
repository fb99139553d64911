# Built-in Imports
from fractions import Fraction
from typing import Any, Iterable, Tuple, Union

# Internal Imports
from ..exceptions import ScalarDivisionError
from .ratfunc import RatFunc

Scalar = Union[Fraction, RatFunc]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(value: Any) -> Scalar:
    if isinstance(value, (Fraction, RatFunc)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot interpret {value!r} as an exact scalar")


def parse_scalar(text: str) -> Scalar:
    """Parse ``"3/7"`` into a Fraction, anything mentioning ``tau`` into a RatFunc."""
    text = text.strip()
    if "tau" in text:
        return RatFunc.parse(text)
    return Fraction(text)


def format_scalar(value: Scalar) -> str:
    return str(value)


def num_den(value: Scalar) -> Tuple[str, str]:
    """Numerator and denominator strings for the canonical JSON form."""
    if isinstance(value, RatFunc):
        return str(value.num), str(value.den)
    value = Fraction(value)
    return str(value.numerator), str(value.denominator)


def divide(a: Scalar, b: Scalar) -> Scalar:
    if not b:
        raise ScalarDivisionError(f"division of {a} by zero")
    return a / b


def evaluate(value: Scalar, point: Fraction) -> Fraction:
    """Specialize the symbolic generator; rationals pass through."""
    if isinstance(value, RatFunc):
        return value.evaluate(point)
    return value


def is_symbolic(value: Any) -> bool:
    return isinstance(value, RatFunc) and not value.is_constant()


def product(values: Iterable[Scalar]) -> Scalar:
    result: Scalar = ONE
    for value in values:
        result = result * value
    return result


def poch_q(u: Scalar, q: Scalar, n: int) -> Scalar:
    """q-shifted factorial (u;q)_n = prod_{r<n} (1 - q^r u)."""
    if n < 0:
        raise ValueError(f"negative Pochhammer length {n}")
    result: Scalar = ONE
    shift: Scalar = u
    for _ in range(n):
        result = result * (1 - shift)
        shift = shift * q
    return result


def rising(a: Scalar, n: int) -> Scalar:
    """Rising factorial (a)_n = a(a+1)...(a+n-1)."""
    if n < 0:
        raise ValueError(f"negative rising factorial length {n}")
    result: Scalar = ONE
    for i in range(n):
        result = result * (a + i)
    return result
