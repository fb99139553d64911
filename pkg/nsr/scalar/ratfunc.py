# Built-in Imports
from fractions import Fraction
from typing import Any, Union

# Third-party Imports
import sympy
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

# Internal Imports
from .. import config
from ..exceptions import DegreeOverflowError, PoleError, ScalarDivisionError

RING, TAU = ring("tau", QQ)


def _qq(value: Union[int, Fraction]):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _frac(coeff) -> Fraction:
    return Fraction(int(coeff.numerator), int(coeff.denominator))


def _poly(value: Any) -> PolyElement:
    if isinstance(value, PolyElement):
        return value
    return RING.ground_new(_qq(value))


def _eval_poly(poly: PolyElement, point: Fraction) -> Fraction:
    total = Fraction(0)
    for (exp,), coeff in poly.terms():
        total += _frac(coeff) * point**exp
    return total


class RatFunc:
    """Reduced rational function in the single generator ``tau`` over QQ.

    The numerator and denominator are coprime and the denominator is monic,
    so two equal functions always carry identical fields.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Any, den: Any = None, _canonical: bool = False):
        num = _poly(num)
        den = RING.one if den is None else _poly(den)
        if not _canonical:
            num, den = self._canonicalize(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _canonicalize(num: PolyElement, den: PolyElement):
        if not den:
            raise ScalarDivisionError("rational function with zero denominator")
        if not num:
            return RING.zero, RING.one
        _, num, den = num.cofactors(den)
        lc = den.LC
        if lc != QQ.one:
            num = num.quo_ground(lc)
            den = den.quo_ground(lc)
        cap = config.get("scalar.max-degree")
        if max(num.degree(), den.degree()) > cap:
            raise DegreeOverflowError(
                f"degree {max(num.degree(), den.degree())} exceeds cap {cap}"
            )
        return num, den

    ####################################################################
    ## Constructors
    ####################################################################

    @classmethod
    def generator(cls) -> "RatFunc":
        return cls(TAU, RING.one, _canonical=True)

    @classmethod
    def constant(cls, value: Union[int, Fraction]) -> "RatFunc":
        return cls(_poly(value), RING.one, _canonical=True)

    @classmethod
    def parse(cls, text: str) -> "RatFunc":
        """Parse an expression in ``tau`` such as ``"(tau**2-1)/(2*tau+1)"``."""
        expr = sympy.together(sympy.sympify(text))
        num, den = sympy.fraction(expr)
        return cls(RING.from_expr(num), RING.from_expr(den))

    ####################################################################
    ## Queries
    ####################################################################

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den == RING.one

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return _frac(self.num.coeff(1)) if self.num else Fraction(0)

    @property
    def degree(self) -> int:
        return max(self.num.degree(), self.den.degree(), 0)

    def evaluate(self, point: Union[int, Fraction]) -> Fraction:
        point = Fraction(point)
        den = _eval_poly(self.den, point)
        if den == 0:
            raise PoleError(f"pole of {self} at tau={point}", point=point)
        return _eval_poly(self.num, point) / den

    def pole_order(self, point: Union[int, Fraction]) -> int:
        """Multiplicity of ``point`` as a root of the reduced denominator."""
        order = 0
        den = self.den
        linear = TAU - _qq(point)
        while den.degree() > 0:
            quotient, remainder = den.div(linear)
            if remainder:
                break
            den = quotient
            order += 1
        return order

    ####################################################################
    ## Field operations
    ####################################################################

    @staticmethod
    def _coerce(other: Any):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.constant(other)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            # gcd(num + c*den, den) = gcd(num, den) = 1
            return RatFunc(self.num + self.den * _qq(other), self.den, _canonical=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RatFunc(RING.zero, RING.one, _canonical=True)
            return RatFunc(self.num * _qq(other), self.den, _canonical=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ScalarDivisionError("division by zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ScalarDivisionError("division by zero")
            return RatFunc(self.num.quo_ground(_qq(other)), self.den, _canonical=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RatFunc(self.num**exponent, self.den**exponent, _canonical=True)

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.constant_value())
        return hash((tuple(sorted(self.num.terms())), tuple(sorted(self.den.terms()))))

    def __str__(self) -> str:
        if self.den == RING.one:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"

    def __reduce__(self):
        return (RatFunc.parse, (str(self),))
