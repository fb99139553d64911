"""The modified Ruijsenaars operator in the cyclic coordinates.

Each theta argument p^{j-i} c x_j/x_i with i < j is the monomial c * y-arc(i, j)
and carries nome P = p^N, so every ratio is a quotient of Jacobi sums.
"""
# Built-in Imports
import logging
from typing import Optional

# Internal Imports
from .. import _logger
from ..qseries import CYCLIC, CoordSystem, Monomial, TruncSeries, theta_expand
from ..scalar import ONE, Scalar, divide
from .twisted import TwistedSeries, q_shift

logger: logging.Logger = _logger.getLogger("nsr-series")


def _theta_ratio(coords: CoordSystem, i: int, j: int, c: Scalar, order: int) -> TruncSeries:
    key = coords.arc(i, j)
    top = theta_expand(Monomial(c, key), coords, order)
    bottom = theta_expand(Monomial(ONE, key), coords, order)
    return top / bottom


def ruijsenaars_coefficient(
    coords: CoordSystem, i: int, t: Scalar, order: int, tilde: bool = False
) -> TruncSeries:
    """Coefficient of T_{q,x_i}; ``tilde`` drops the t^{N-i} prefactor."""
    coords.require(CYCLIC)
    n = coords.n
    result = TruncSeries.one(coords, order)
    for j in range(1, i):
        result = result * _theta_ratio(coords, j, i, t, order)
    for k in range(i + 1, n + 1):
        result = result * _theta_ratio(coords, i, k, divide(ONE, t), order)
    return result if tilde else result.scale(t ** (n - i))


def ruijsenaars_apply(
    F: TwistedSeries, q: Scalar, t: Scalar, order: Optional[int] = None, tilde: bool = False
) -> TwistedSeries:
    """D_x(p) (or its x^{beta delta}-conjugate with ``tilde``) on x^lambda body."""
    coords = F.body.coords
    coords.require(CYCLIC)
    order = F.body.trunc if order is None else min(order, F.body.trunc)
    result = TruncSeries.zero(coords, order)
    for i in range(1, coords.n + 1):
        shifted = q_shift(F, i, q).truncate(order)
        result = result + ruijsenaars_coefficient(coords, i, t, order, tilde) * shifted
    logger.debug(f"ruijsenaars_apply N={coords.n} D={order} tilde={tilde}")
    return F.with_body(result)
