"""Elliptic theta functions with nome P = p^N as truncated series.

The triple product Theta_P(z) = (z;P)(P/z;P)(P;P) is expanded through the
Jacobi sum

    Theta_P(z) = sum_n (-1)^n P^{n(n-1)/2} z^n

and the z-derivatives Theta^{(k)} = (z d/dz)^k Theta insert n^k into each
term. For z = c * y^e every term is a genuine monomial as long as e is a 0/1
vector that is neither empty nor full.
"""
# Built-in Imports
from fractions import Fraction
from typing import Dict, List

# Internal Imports
from ..exceptions import DegreeConstraintError
from ..scalar import ONE, Scalar, divide
from .coords import NOME, CoordSystem, Key, Monomial, add_keys, scale_key
from .products import euler_product
from .series import TruncSeries


def _check_theta_argument(w: Monomial, coords: CoordSystem):
    coords.require("cyclic")
    if len(w.exponents) != coords.arity:
        raise DegreeConstraintError(f"monomial {w.exponents} does not fit {coords}")
    if any(e not in (0, 1) for e in w.exponents):
        raise DegreeConstraintError(f"theta argument {w.exponents} is not a 0/1 arc")
    if not 1 <= w.degree <= coords.n - 1:
        raise DegreeConstraintError(
            f"theta argument {w.exponents} needs degree between 1 and N-1"
        )


def _jacobi_range(degree: int, n: int, order: int) -> range:
    # Term n has total degree n*degree + N*n(n-1)/2
    bound = 0
    while True:
        bound += 1
        low = -bound * degree + n * bound * (bound + 1) // 2
        high = bound * degree + n * bound * (bound - 1) // 2
        if low > order and high > order:
            return range(-bound + 1, bound)


def theta_expand(
    w: Monomial, coords: CoordSystem, order: int, derivative: int = 0, shift: int = 0
) -> TruncSeries:
    """Theta^{(derivative)}_P(P^shift w) truncated at ``order``.

    A nonzero ``shift`` multiplies the result by w^shift P^{shift(shift-1)/2},
    which keeps it a power series and cancels in ratios of derivatives.
    """
    _check_theta_argument(w, coords)
    full = coords.full()
    coeffs: Dict[Key, Scalar] = {}
    for j in _jacobi_range(w.degree, coords.n, order):
        key = add_keys(scale_key(w.exponents, j), scale_key(full, j * (j - 1) // 2))
        if sum(key) > order:
            continue
        # j is the power of w; n the power of P^shift w
        n = j - shift
        coeffs[key] = (-1) ** (n % 2) * w.prefactor**j * n**derivative
    return TruncSeries(coords, order, coeffs)


def theta_product(w: Monomial, coords: CoordSystem, order: int) -> TruncSeries:
    """Theta_P(w) as the literal finite triple product."""
    _check_theta_argument(w, coords)
    full = coords.full()
    n = coords.n
    dual = Monomial(divide(ONE, w.prefactor), tuple(1 - e for e in w.exponents))
    result = euler_product(coords, order)
    for base in (w, dual):
        i = 0
        while base.degree + i * n <= order:
            shifted = Monomial(base.prefactor, add_keys(base.exponents, scale_key(full, i)))
            result = result * (1 - TruncSeries.monomial(coords, order, shifted))
            i += 1
    return result


def theta_logderiv(w: Monomial, k: int, coords: CoordSystem, order: int) -> TruncSeries:
    """Theta^{(k)}_P(w) / Theta_P(w); the denominator has constant term 1."""
    if k not in (1, 2):
        raise ValueError(f"theta log-derivative order must be 1 or 2, got {k}")
    return theta_expand(w, coords, order, k) / theta_expand(w, coords, order)


def v_potential(w: Monomial, coords: CoordSystem, order: int, shift: int = 0) -> TruncSeries:
    """V(P^shift w|P) = Theta^{(2)}/Theta - (Theta^{(1)}/Theta)^2."""
    theta = theta_expand(w, coords, order, shift=shift).invert()
    first = theta_expand(w, coords, order, 1, shift) * theta
    second = theta_expand(w, coords, order, 2, shift) * theta
    return second - first * first


def theta_at_one(k: int, coords: CoordSystem, order: int) -> TruncSeries:
    """Theta^{(k)}_P(1), k >= 1, as a series supported on powers of P."""
    if k < 1:
        raise ValueError("Theta_P(1) vanishes; ask for a derivative")
    coeffs: Dict[Key, Scalar] = {}
    arity = coords.arity
    bound = 1
    while (bound * (bound + 1) // 2) * arity <= order:
        bound += 1
    for m in range(-bound, bound + 1):
        power = m * (m - 1) // 2
        if power * arity > order or m == 0:
            continue
        key = (power,) if coords.kind == NOME else coords.uniform(power)
        coeffs[key] = coeffs.get(key, Fraction(0)) + (-1) ** (m % 2) * Fraction(m) ** k
    return TruncSeries(coords, order, coeffs)


def nome_derivative(series: TruncSeries) -> TruncSeries:
    """P d/dP on a series supported on powers of P."""
    arity = series.coords.arity
    bad = series.non_uniform_keys()
    if bad:
        raise DegreeConstraintError(f"key {bad[0]} is not a power of P")
    return series.weight(lambda key: Fraction(sum(key), arity))


def v0_series(coords: CoordSystem, order: int) -> TruncSeries:
    """V_0(P) = 2 (P d/dP (P;P)) / (P;P)."""
    euler = euler_product(coords, order)
    return nome_derivative(euler).scale(Fraction(2)) / euler


def v0_coefficients(order: int) -> List[Scalar]:
    """Coefficients of V_0 at P^1 .. P^order."""
    series = v0_series(CoordSystem.nome(), order)
    return series.nome_coefficients()[1:]
