"""Elliptic Calogero-Sutherland limits: the additive series f^eCS and psi_0.

With q = exp(h), s_i = q^{lambda_i}, kappa = q^k and t = q^beta, each
Pochhammer factor (u q^a kappa^b; q)_m of a Nekrasov block becomes the rising
factorial (v + a + b k)_m as h -> 0. Numerator and denominator carry the same
number of factors, so the powers of h cancel coefficient by coefficient.
"""
# Built-in Imports
import logging
from fractions import Fraction
from typing import Sequence

# Internal Imports
from .. import _logger
from ..exceptions import DegenerateParametersError
from ..nekrasov import nekrasov_additive
from ..partition import DominantWeight, PartitionTuple, gt_counts
from ..qseries import CoordSystem, Monomial, TruncSeries, euler_product, theta_expand
from ..scalar import ONE, ZERO, Scalar, divide
from .common import StationaryLimit, check_order, coefficient_series, stationary_limit
from .params import ParamPoint

logger: logging.Logger = _logger.getLogger("nsr-series")


def _require_ecs(point: ParamPoint):
    if point.beta is None or point.k is None or not point.lam:
        raise ValueError(f"eCS series need lam, k and beta, got {point.as_record()}")


def additive_ratio(T: PartitionTuple, lam: Sequence[Scalar], k: Scalar, beta: Scalar) -> Scalar:
    """prod_{i,j} N^{(j-i)}(1 - beta + lam_j - lam_i | k) / N^{(j-i)}(lam_j - lam_i | k)."""
    n = T.n
    value: Scalar = ONE
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            v = lam[j - 1] - lam[i - 1]
            lam_i, lam_j = T.component(i), T.component(j)
            den = nekrasov_additive(j - i, lam_i, lam_j, v, k, n)
            if not den:
                raise DegenerateParametersError(
                    f"additive block ({i},{j}) of tuple {T} vanishes at v={v}",
                    key=T.degree_vector(),
                    tuple=T,
                )
            num = nekrasov_additive(j - i, lam_i, lam_j, 1 - beta + v, k, n)
            if not num:
                return ZERO
            value = divide(value * num, den)
    return value


def _ecs_coefficient(point: ParamPoint):
    _require_ecs(point)

    def coefficient(d, tuples) -> Scalar:
        total: Scalar = ZERO
        for T in tuples:
            total = total + additive_ratio(T, point.lam, point.k, point.beta)
        return total

    return coefficient


def f_ecs(point: ParamPoint, order: int) -> TruncSeries:
    """f^eCS(x, p | lambda, k | beta); ``point.k`` may be the symbolic generator."""
    check_order(order)
    logger.debug(f"f_ecs N={point.n} D={order} k={point.k} beta={point.beta}")
    return coefficient_series(CoordSystem.cyclic(point.n), order, _ecs_coefficient(point))


def alpha_ecs(point: ParamPoint, order: int) -> TruncSeries:
    check_order(order)
    return coefficient_series(
        CoordSystem.cyclic(point.n), order, _ecs_coefficient(point), uniform_only=True
    )


def f_ecs_stationary(point: ParamPoint, order: int, at: Fraction = Fraction(0)) -> StationaryLimit:
    """(f^eCS / alpha) at k = ``at``; ``point.k`` must be symbolic."""
    f = f_ecs(point, order)
    return stationary_limit(f, f.uniform_part(), at)


def psi0(n: int, beta: Scalar, order: int) -> TruncSeries:
    """Quasi-ground state ((P;P)^{N - N(N-1)/2} prod_{i<j} Theta_P(p^{j-i} x_j/x_i))^beta."""
    check_order(order)
    coords = CoordSystem.cyclic(n)
    if not beta:
        return TruncSeries.one(coords, order)
    base = euler_product(coords, order) ** (n - n * (n - 1) // 2)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            base = base * theta_expand(Monomial(ONE, coords.arc(i, j)), coords, order)
    return base.pow_rational(beta)


def gt_series(w: DominantWeight, order: int) -> TruncSeries:
    """Generating series sum_d #GT(w, d) y^d of affine Gelfand-Tsetlin patterns."""
    check_order(order)
    counts = gt_counts(w, order)
    return TruncSeries(
        CoordSystem.cyclic(w.n), order, {d: Fraction(c) for d, c in counts.items()}
    )
