"""Affine q-Toda limits of the Ruijsenaars function, in y_i = p~ x_{i+1}/x_i."""
# Built-in Imports
from fractions import Fraction

# Internal Imports
from ..exceptions import MissingRootError
from ..partition import m_from_degree
from ..qseries import CoordSystem, TruncSeries
from ..scalar import ONE, ZERO, Scalar
from .common import (
    StationaryLimit,
    block_ratio,
    check_order,
    coefficient_series,
    stationary_limit,
)
from .params import ParamPoint


def _toda_coefficient(point: ParamPoint):
    if point.r is None or point.root != 2:
        raise MissingRootError(f"the Toda series needs q = r^2, got root {point.root}, r={point.r}")
    s = point.spectral()

    def coefficient(d, tuples) -> Scalar:
        total: Scalar = ZERO
        for T in tuples:
            total = total + block_ratio(T, s, point.q, point.kappa, None) * point.kappa ** (-T.size)
        if not total:
            return total
        weight: Scalar = ONE
        for i, m in enumerate(m_from_degree(d)):
            weight = weight * s[i] ** (-m) * point.root_power(-m * m)
        return total * weight

    return coefficient


def f_toda(point: ParamPoint, order: int) -> TruncSeries:
    """Closed form of lim_{t->0} f(x, t p~ | s, kappa | q, q/t).

    ``point`` must carry r with q = r^2, so that q^{-m^2/2} = r^{-m^2}.
    """
    check_order(order)
    return coefficient_series(CoordSystem.cyclic(point.n), order, _toda_coefficient(point))


def f_toda_zero(point: ParamPoint, order: int) -> TruncSeries:
    """lim_{t->0} f(x, t p~ | s, kappa | q, t); coefficients are 1 / prod N(s_j/s_i)."""
    check_order(order)
    s = point.spectral()

    def coefficient(d, tuples) -> Scalar:
        total: Scalar = ZERO
        for T in tuples:
            total = total + block_ratio(T, s, point.q, point.kappa, None)
        return total

    return coefficient_series(CoordSystem.cyclic(point.n), order, coefficient)


def alpha_toda(point: ParamPoint, order: int) -> TruncSeries:
    check_order(order)
    return coefficient_series(
        CoordSystem.cyclic(point.n), order, _toda_coefficient(point), uniform_only=True
    )


def f_toda_stationary(point: ParamPoint, order: int, at: Fraction = Fraction(1)) -> StationaryLimit:
    """(f_toda / alpha_toda) at kappa = ``at`` with ``point.kappa`` symbolic."""
    f = f_toda(point, order)
    return stationary_limit(f, f.uniform_part(), at)
