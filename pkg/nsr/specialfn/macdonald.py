"""The gl_N Macdonald function as a series in z_a = x_{a+1}/x_a.

Coefficients are indexed by strictly upper triangular matrices theta with
nonnegative entries; theta contributes the monomial prod (x_j/x_i)^{theta_ij},
whose finite-coordinate key is d_a = sum_{i <= a < j} theta_ij.
"""
# Built-in Imports
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

# Internal Imports
from .. import _logger
from ..exceptions import DegenerateParametersError, InternalMismatchError
from ..qseries import CoordSystem, Key, Monomial, TruncSeries, infinite_poch_expand
from ..scalar import ONE, ZERO, Scalar, divide, poch_q
from .common import check_order

logger: logging.Logger = _logger.getLogger("nsr-series")

Theta = Dict[Tuple[int, int], int]


@dataclass(frozen=True)
class MacdonaldFactor:
    """(prefactor * s_j/s_i; q)_length, in the denominator when ``inverse``."""

    prefactor: Scalar
    i: int
    j: int
    length: int
    inverse: bool = False

    def value(self, s: Sequence[Scalar], q: Scalar) -> Scalar:
        return poch_q(divide(self.prefactor * s[self.j - 1], s[self.i - 1]), q, self.length)


####################################################################
## Index sets
####################################################################


def _pairs(n: int) -> List[Tuple[int, int]]:
    return [(i, j) for j in range(2, n + 1) for i in range(1, j)]


def enumerate_thetas(n: int, order: int) -> Iterator[Theta]:
    """Every theta with weighted degree sum theta_ij (j - i) <= ``order``."""
    pairs = _pairs(n)

    def walk(index: int, room: int, current: Theta):
        if index == len(pairs):
            yield dict(current)
            return
        i, j = pairs[index]
        for value in range(room // (j - i) + 1):
            if value:
                current[(i, j)] = value
            yield from walk(index + 1, room - value * (j - i), current)
            current.pop((i, j), None)

    yield from walk(0, order, {})


def theta_key(theta: Theta, n: int) -> Key:
    return tuple(
        sum(v for (i, j), v in theta.items() if i <= a < j) for a in range(1, n)
    )


def _restrict(theta: Theta, n: int) -> Theta:
    return {(i, j): v for (i, j), v in theta.items() if j <= n}


####################################################################
## Coefficients
####################################################################


def macdonald_factors(theta: Theta, n: int, q: Scalar, t: Scalar) -> List[MacdonaldFactor]:
    """Pochhammer factors of the closed product formula for c_N(theta)."""
    def th(i: int, j: int) -> int:
        return theta.get((i, j), 0)

    factors: List[MacdonaldFactor] = []
    for k in range(2, n + 1):
        for i in range(1, k):
            m = th(i, k)
            if not m:
                continue
            for j in range(i, k):
                a = sum(th(i, b) - th(j + 1, b) for b in range(k + 1, n + 1))
                c = -th(j, k) + sum(th(i, b) - th(j, b) for b in range(k + 1, n + 1))
                factors.append(MacdonaldFactor(q**a * t, i, j + 1, m))
                factors.append(MacdonaldFactor(q ** (a + 1), i, j + 1, m, inverse=True))
                factors.append(MacdonaldFactor(divide(q ** (c + 1), t), i, j, m))
                factors.append(MacdonaldFactor(q**c, i, j, m, inverse=True))
    return factors


def _ratio(factors: Sequence[MacdonaldFactor], s: Sequence[Scalar], q: Scalar, theta: Theta) -> Scalar:
    value: Scalar = ONE
    for f in factors:
        if not f.inverse:
            continue
        den = f.value(s, q)
        if not den:
            raise DegenerateParametersError(
                f"c_N denominator (s_{f.j}/s_{f.i}) vanishes for theta={theta}",
                key=tuple(sorted(theta.items())),
            )
        value = divide(value, den)
    for f in factors:
        if not f.inverse:
            value = value * f.value(s, q)
            if not value:
                return ZERO
    return value


def c_closed(theta: Theta, s: Sequence[Scalar], q: Scalar, t: Scalar) -> Scalar:
    n = len(s)
    return _ratio(macdonald_factors(theta, n, q, t), s, q, theta)


def c_recursive(theta: Theta, s: Sequence[Scalar], q: Scalar, t: Scalar) -> Scalar:
    """c_N through c_{N-1} at the shifted spectral point q^{-theta_{iN}} s_i."""
    n = len(s)
    if n == 1:
        return ONE
    last = [theta.get((i, n), 0) for i in range(1, n)]
    shifted = [s[i - 1] * q ** (-last[i - 1]) for i in range(1, n)]
    value = c_recursive(_restrict(theta, n - 1), shifted, q, t)
    if not value:
        return ZERO
    factors: List[MacdonaldFactor] = []
    for i in range(1, n):
        m = last[i - 1]
        if not m:
            continue
        for j in range(i, n):
            factors.append(MacdonaldFactor(t, i, j + 1, m))
            factors.append(MacdonaldFactor(q, i, j + 1, m, inverse=True))
            factors.append(MacdonaldFactor(divide(q ** (1 - last[j - 1]), t), i, j, m))
            factors.append(MacdonaldFactor(q ** (-last[j - 1]), i, j, m, inverse=True))
    return value * _ratio(factors, s, q, theta)


def c_coefficient(theta: Theta, s: Sequence[Scalar], q: Scalar, t: Scalar) -> Scalar:
    """c_N(theta; s | q, t), cross-checked between the two formulas."""
    closed = c_closed(theta, s, q, t)
    recursive = c_recursive(theta, s, q, t)
    if closed != recursive:
        raise InternalMismatchError(
            f"c_N closed form {closed} != recursion {recursive} at theta={theta}"
        )
    return closed


####################################################################
## Series
####################################################################


def f_macdonald(n: int, s: Sequence[Scalar], q: Scalar, t: Scalar, order: int) -> TruncSeries:
    check_order(order)
    if len(s) != n:
        raise ValueError(f"expected {n} spectral values, got {len(s)}")
    coords = CoordSystem.finite(n)
    coeffs: Dict[Key, Scalar] = {}
    count = 0
    for theta in enumerate_thetas(n, order):
        key = theta_key(theta, n)
        coeffs[key] = coeffs.get(key, ZERO) + c_coefficient(theta, s, q, t)
        count += 1
    logger.debug(f"f_macdonald N={n} D={order}: {count} thetas")
    return TruncSeries(coords, order, coeffs)


def macdonald_prefactor(n: int, q: Scalar, t: Scalar, order: int) -> TruncSeries:
    """prod_{i<j} (q z/t; q)_inf / (q z; q)_inf over the finite arcs z."""
    coords = CoordSystem.finite(n)
    result = TruncSeries.one(coords, order)
    for i, j in _pairs(n):
        key = coords.arc(i, j)
        if sum(key) > order:
            continue
        result = result * infinite_poch_expand(Monomial(divide(q, t), key), q, coords, order)
        result = result * infinite_poch_expand(Monomial(q, key), q, coords, order, inverse=True)
    return result


def phi_macdonald(n: int, s: Sequence[Scalar], q: Scalar, t: Scalar, order: int) -> TruncSeries:
    return macdonald_prefactor(n, q, t, order) * f_macdonald(n, s, q, t, order)


####################################################################
## Joint expansion in x and s
####################################################################

DualTable = Dict[Tuple[Key, Key], Scalar]


def _factor_series(
    f: MacdonaldFactor, q: Scalar, coords: CoordSystem, order: int, theta: Theta
) -> TruncSeries:
    """(c s_j/s_i; q)_m as a polynomial in the ratios s_{a+1}/s_a, inverted if needed."""
    if f.i == f.j:
        value = poch_q(f.prefactor, q, f.length)
        if f.inverse:
            if not value:
                raise DegenerateParametersError(
                    f"constant c_N denominator vanishes for theta={theta}",
                    key=tuple(sorted(theta.items())),
                )
            value = divide(ONE, value)
        return TruncSeries.constant(coords, order, value)
    key = coords.arc(f.i, f.j)
    result = TruncSeries.one(coords, order)
    shift = f.prefactor
    for _ in range(f.length):
        result = result * (1 - TruncSeries.monomial(coords, order, Monomial(shift, key)))
        shift = shift * q
    return result.invert() if f.inverse else result


def c_sigma_series(theta: Theta, n: int, q: Scalar, t: Scalar, order: int) -> TruncSeries:
    """c_N(theta) expanded in sigma_a = s_{a+1}/s_a up to total degree ``order``."""
    coords = CoordSystem.finite(n)
    result = TruncSeries.one(coords, order)
    for f in macdonald_factors(theta, n, q, t):
        result = result * _factor_series(f, q, coords, order, theta)
    return result


def macdonald_dual_table(n: int, q: Scalar, t: Scalar, z_order: int, s_order: int) -> DualTable:
    """Coefficients of phi^{gl_N} at (z-key, sigma-key) up to the two total degrees."""
    check_order(z_order)
    check_order(s_order)
    by_key: Dict[Key, TruncSeries] = {}
    for theta in enumerate_thetas(n, z_order):
        key = theta_key(theta, n)
        series = c_sigma_series(theta, n, q, t, s_order)
        by_key[key] = by_key[key] + series if key in by_key else series
    prefactor = macdonald_prefactor(n, q, t, z_order)
    table: DualTable = {}
    for pkey, pvalue in prefactor.items():
        for fkey, series in by_key.items():
            zkey = tuple(a + b for a, b in zip(pkey, fkey))
            if sum(zkey) > z_order:
                continue
            for skey, value in series.items():
                table[(zkey, skey)] = table.get((zkey, skey), ZERO) + pvalue * value
    return {k: v for k, v in sorted(table.items()) if v}
