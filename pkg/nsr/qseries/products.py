"""Truncated expansions of infinite q-products.

Single products use Euler's identities

    (w;q)_inf   = sum_n (-1)^n q^{n(n-1)/2} w^n / (q;q)_n
    1/(w;q)_inf = sum_n w^n / (q;q)_n

which terminate at n <= D/deg(w). Double products (u;q,P)_inf are the finite
product over b of (u P^b;q)_inf.
"""
# Built-in Imports
from typing import Dict

# Internal Imports
from ..exceptions import DegenerateParametersError, DegreeConstraintError
from ..scalar import ONE, Scalar
from .coords import CoordSystem, Key, Monomial, add_keys, scale_key
from .series import TruncSeries


def _check_argument(w: Monomial, coords: CoordSystem):
    if len(w.exponents) != coords.arity:
        raise DegreeConstraintError(f"monomial {w.exponents} does not fit {coords}")
    if any(e < 0 for e in w.exponents):
        raise DegreeConstraintError(f"monomial {w.exponents} has a negative exponent")
    if w.degree < 1:
        raise DegreeConstraintError(f"product argument {w.exponents} has degree 0")


def infinite_poch_expand(
    w: Monomial, q: Scalar, coords: CoordSystem, order: int, inverse: bool = False
) -> TruncSeries:
    """(w;q)_inf, or its reciprocal with ``inverse=True``, truncated at ``order``."""
    _check_argument(w, coords)
    coeffs: Dict[Key, Scalar] = {coords.zero: ONE}
    qq: Scalar = ONE
    power: Scalar = ONE
    for n in range(1, order // w.degree + 1):
        qq = qq * (1 - q**n)
        if not qq:
            raise DegenerateParametersError(f"(q;q)_{n} vanishes at q={q}")
        power = power * w.prefactor
        coeff = power / qq
        if not inverse:
            coeff = coeff * (-1) ** n * q ** (n * (n - 1) // 2)
        coeffs[scale_key(w.exponents, n)] = coeff
    return TruncSeries(coords, order, coeffs)


def literal_poch_expand(
    w: Monomial, q: Scalar, coords: CoordSystem, order: int, factors: int
) -> TruncSeries:
    """The partial product prod_{i < factors} (1 - q^i w), truncated."""
    _check_argument(w, coords)
    result = TruncSeries.one(coords, order)
    for i in range(factors):
        result = result * (1 - TruncSeries.monomial(coords, order, w.scale(q**i)))
    return result


def double_poch_expand(
    u: Monomial, q: Scalar, coords: CoordSystem, order: int, inverse: bool = False
) -> TruncSeries:
    """(u;q,P)_inf = prod_{b >= 0} (u P^b;q)_inf with P = prod_i y_i."""
    _check_argument(u, coords)
    full = coords.full()
    result = TruncSeries.one(coords, order)
    b = 0
    while u.degree + b * sum(full) <= order:
        shifted = Monomial(u.prefactor, add_keys(u.exponents, scale_key(full, b)))
        result = result * infinite_poch_expand(shifted, q, coords, order, inverse)
        b += 1
    return result


def euler_product(coords: CoordSystem, order: int) -> TruncSeries:
    """(P;P)_inf as a literal finite product; every factor has P-degree >= 1."""
    full = coords.full()
    result = TruncSeries.one(coords, order)
    i = 1
    while i * sum(full) <= order:
        result = result * (1 - TruncSeries.monomial(coords, order, Monomial.of(scale_key(full, i))))
        i += 1
    return result
