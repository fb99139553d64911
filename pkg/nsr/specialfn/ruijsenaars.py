"""The non-stationary Ruijsenaars function and its normalizations.

All series live in the cyclic coordinates y_i = p x_{i+1}/x_i. The factor
(p/t)^{|T|} of the defining sum is split as t^{-|d|} in the coefficient and
y^d in the monomial, so the coordinates never carry a parameter. The ``t`` of
a :class:`ParamPoint` is the slot written into the Nekrasov numerators; call
sites that need f(...|q, q/t) pass the point with ``t`` replaced by q/t.
"""
# Built-in Imports
import logging
from fractions import Fraction

# Internal Imports
from .. import _logger
from ..qseries import CoordSystem, Monomial, TruncSeries, double_poch_expand
from ..scalar import ZERO, Scalar
from .common import (
    StationaryLimit,
    block_ratio,
    check_order,
    coefficient_series,
    stationary_limit,
)
from .params import ParamPoint

logger: logging.Logger = _logger.getLogger("nsr-series")


def _f_coefficient(point: ParamPoint):
    s = point.spectral()

    def coefficient(d, tuples) -> Scalar:
        total: Scalar = ZERO
        for T in tuples:
            total = total + block_ratio(T, s, point.q, point.kappa, point.t)
        return total * point.t ** (-sum(d)) if total else total

    return coefficient


def f_hat(point: ParamPoint, order: int) -> TruncSeries:
    """f(x, p | s, kappa | q, t) truncated at total y-degree ``order``."""
    check_order(order)
    logger.debug(f"f_hat N={point.n} D={order}")
    return coefficient_series(CoordSystem.cyclic(point.n), order, _f_coefficient(point))


def alpha_const(point: ParamPoint, order: int) -> TruncSeries:
    """The x-constant term of f: the restriction to uniform degree vectors."""
    check_order(order)
    return coefficient_series(
        CoordSystem.cyclic(point.n), order, _f_coefficient(point), uniform_only=True
    )


def _product_pair(
    coords: CoordSystem, order: int, q: Scalar, top: Scalar, bottom: Scalar
) -> TruncSeries:
    """prod over arcs and co-arcs of (top w;q,P) / (bottom w;q,P)."""
    n = coords.n
    result = TruncSeries.one(coords, order)
    keys = [coords.arc(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    keys += [coords.coarc(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    for key in keys:
        if sum(key) > order:
            continue
        result = result * double_poch_expand(Monomial(top, key), q, coords, order)
        result = result * double_poch_expand(Monomial(bottom, key), q, coords, order, inverse=True)
    return result


def f_hat_kappa0(n: int, q: Scalar, t: Scalar, order: int) -> TruncSeries:
    """Closed double-product value of f at kappa = 0."""
    check_order(order)
    return _product_pair(CoordSystem.cyclic(n), order, q, q, t)


def normalizing_prefactor(n: int, q: Scalar, t: Scalar, order: int) -> TruncSeries:
    """The reciprocal of :func:`f_hat_kappa0`, expanded directly."""
    check_order(order)
    return _product_pair(CoordSystem.cyclic(n), order, q, t, q)


def phi_hat(point: ParamPoint, order: int) -> TruncSeries:
    """Normalized form phi = f / f(kappa=0)."""
    return normalizing_prefactor(point.n, point.q, point.t, order) * f_hat(point, order)


def f_stationary(point: ParamPoint, order: int, at: Fraction = Fraction(1)) -> StationaryLimit:
    """(f / alpha) at kappa = ``at``; ``point.kappa`` must be the symbolic generator."""
    f = f_hat(point, order)
    alpha = f.uniform_part()
    return stationary_limit(f, alpha, at)
