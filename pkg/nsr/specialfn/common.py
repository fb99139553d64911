# Built-in Imports
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterator, Optional, Sequence, Tuple

# Internal Imports
from .. import _logger, config
from ..exceptions import DegenerateParametersError, PoleError, ResourceCapError
from ..nekrasov import evaluate_factors, nekrasov_block_factors
from ..partition import DegreeVector, PartitionTuple, tuples_by_degree
from ..qseries import CoordSystem, TruncSeries
from ..scalar import ONE, ZERO, RatFunc, Scalar, divide

logger: logging.Logger = _logger.getLogger("nsr-series")


def check_order(order: int):
    cap = config.max_order()
    if order < 0:
        raise ValueError(f"negative truncation order {order}")
    if order > cap:
        raise ResourceCapError(f"truncation order {order} exceeds cap {cap}")


def iter_tuples(
    n: int, order: int, uniform_only: bool = False
) -> Iterator[Tuple[DegreeVector, Tuple[PartitionTuple, ...]]]:
    """Degree vectors with their tuples, by total size up to ``order``."""
    for size in range(order + 1):
        if uniform_only and size % n:
            continue
        for d, tuples in sorted(tuples_by_degree(n, size).items()):
            if uniform_only and any(x != d[0] for x in d):
                continue
            yield d, tuples


def block_ratio(
    T: PartitionTuple,
    s: Sequence[Scalar],
    q: Scalar,
    kappa: Scalar,
    numerator_shift: Optional[Scalar],
) -> Scalar:
    """prod_{i,j} N^{(j-i)}(shift s_j/s_i) / N^{(j-i)}(s_j/s_i).

    With ``numerator_shift=None`` only the denominators are kept.
    """
    n = T.n
    value: Scalar = ONE
    vanishes = False
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            factors = nekrasov_block_factors(j - i, T.component(i), T.component(j), n)
            if not factors:
                continue
            u = divide(s[j - 1], s[i - 1])
            den = evaluate_factors(factors, u, q, kappa)
            if not den:
                raise DegenerateParametersError(
                    f"block N^({(j - i) % n}) of tuple {T} vanishes at u={u}",
                    key=T.degree_vector(),
                    tuple=T,
                )
            if numerator_shift is None:
                value = divide(value, den)
                continue
            num = evaluate_factors(factors, numerator_shift * u, q, kappa)
            if not num:
                vanishes = True
                continue
            value = divide(value * num, den)
    return ZERO if vanishes else value


def scale_limit(series: TruncSeries, point: Fraction = Fraction(0)) -> TruncSeries:
    """Rescale the d-coefficient by tau^{|d|}, then set tau = ``point``.

    Realizes p = tau * p~ followed by the limit tau -> point.
    """
    tau = RatFunc.generator()
    return series.weight(lambda key: tau ** sum(key)).evaluate(point)


@dataclass
class StationaryLimit:
    """The ratio f/alpha at a special value of the symbolic parameter."""

    series: TruncSeries
    alpha: TruncSeries
    point: Fraction
    pole_orders: Dict[int, int] = field(default_factory=dict)


def stationary_limit(f: TruncSeries, alpha: TruncSeries, point: Fraction) -> StationaryLimit:
    """(f / alpha) evaluated at ``point``; raises PoleError naming the key."""
    ratio = f / alpha
    orders: Dict[int, int] = {}
    for key, value in alpha.items():
        if isinstance(value, RatFunc):
            orders[key[0]] = value.pole_order(point)
    logger.debug(f"alpha pole orders at {point}: {orders}")
    try:
        series = ratio.evaluate(point)
    except PoleError as e:
        raise PoleError(f"f/alpha is singular at {point}: {e}", point=point, key=e.key) from e
    return StationaryLimit(series=series, alpha=alpha, point=point, pole_orders=orders)


def coefficient_series(
    coords: CoordSystem,
    order: int,
    coefficient: Callable[[DegreeVector, Tuple[PartitionTuple, ...]], Scalar],
    uniform_only: bool = False,
) -> TruncSeries:
    coeffs: Dict[DegreeVector, Scalar] = {}
    for d, tuples in iter_tuples(coords.n, order, uniform_only):
        value = coefficient(d, tuples)
        if value:
            coeffs[d] = value
    return TruncSeries(coords, order, coeffs)
