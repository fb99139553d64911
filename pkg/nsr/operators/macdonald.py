# Built-in Imports
import logging

# Internal Imports
from .. import _logger
from ..qseries import FINITE, CoordSystem, Monomial, TruncSeries
from ..scalar import ONE, Scalar
from .twisted import TwistedSeries, q_shift

logger: logging.Logger = _logger.getLogger("nsr-series")


def macdonald_coefficient(coords: CoordSystem, i: int, t: Scalar, order: int) -> TruncSeries:
    """prod_{j != i} (t x_i - x_j)/(x_i - x_j) expanded for x_1 >> ... >> x_N."""
    coords.require(FINITE)
    n = coords.n
    result = TruncSeries.one(coords, order)
    for j in range(1, n + 1):
        if j == i:
            continue
        if j > i:
            arc = TruncSeries.monomial(coords, order, Monomial(ONE, coords.arc(i, j)))
            result = result * (t - arc) * (1 - arc).invert()
        else:
            arc = TruncSeries.monomial(coords, order, Monomial(ONE, coords.arc(j, i)))
            result = result * (1 - arc.scale(t)) * (1 - arc).invert()
    return result


def macdonald_apply(F: TwistedSeries, q: Scalar, t: Scalar) -> TwistedSeries:
    """The gl_N Macdonald operator sum_i prod_{j != i} (t x_i - x_j)/(x_i - x_j) T_{q,x_i}."""
    coords = F.body.coords
    coords.require(FINITE)
    order = F.body.trunc
    result = TruncSeries.zero(coords, order)
    for i in range(1, coords.n + 1):
        result = result + macdonald_coefficient(coords, i, t, order) * q_shift(F, i, q)
    return F.with_body(result)
