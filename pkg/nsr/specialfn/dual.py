"""Joint expansion of phi in y_i = p x_{i+1}/x_i and sigma_i = kappa s_{i+1}/s_i.

Every argument kappa^b s_j/s_i of a Nekrasov factor is a sigma-monomial: with
l = (j - i) mod N it equals (prod sigma)^{(b-l)/N} times the cyclic sigma-arc of
length l starting at i. Factors whose monomial has negative degree are turned
around, (1 - t c/M)/(1 - c/M) = t (1 - M/(t c))/(1 - M/c), so every coefficient
becomes a power series at sigma = 0.
"""
# Built-in Imports
import logging
from typing import Dict, List, Tuple

# Internal Imports
from .. import _logger
from ..exceptions import DegenerateParametersError, DegreeConstraintError
from ..nekrasov import PochFactor, nekrasov_block_factors
from ..partition import PartitionTuple
from ..qseries import CoordSystem, Key, Monomial, TruncSeries
from ..scalar import ONE, ZERO, Scalar, divide
from .common import check_order, iter_tuples
from .ruijsenaars import normalizing_prefactor

logger: logging.Logger = _logger.getLogger("nsr-series")

DualTable = Dict[Tuple[Key, Key], Scalar]


def sigma_key(n: int, i: int, j: int, b: int) -> Key:
    """Exponent vector of kappa^b s_j/s_i in the cyclic sigma variables."""
    ell = (j - i) % n
    w, rest = divmod(b - ell, n)
    if rest:
        raise DegreeConstraintError(f"kappa^{b} s_{j}/s_{i} is not a sigma-monomial")
    key = [w] * n
    for a in range(ell):
        key[(i - 1 + a) % n] += 1
    if any(e > 0 for e in key) and any(e < 0 for e in key):
        raise DegreeConstraintError(f"kappa^{b} s_{j}/s_{i} has mixed-sign key {key}")
    return tuple(key)


def _factor_ratio(
    f: PochFactor, i: int, j: int, q: Scalar, t: Scalar, coords: CoordSystem, order: int, T: PartitionTuple
) -> TruncSeries:
    """(t u q^a kappa^b; q)_m / (u q^a kappa^b; q)_m with u = s_j/s_i as a sigma-series."""
    key = sigma_key(coords.n, i, j, f.kappa_exp)
    result = TruncSeries.one(coords, order)
    for r in range(f.length):
        c = q ** (f.q_exp + r)
        if not any(key):
            if not 1 - c:
                raise DegenerateParametersError(
                    f"constant factor (q^{f.q_exp + r}) of tuple {T} vanishes",
                    key=T.degree_vector(),
                    tuple=T,
                )
            result = result.scale(divide(1 - t * c, 1 - c))
        elif sum(key) > 0:
            top = 1 - TruncSeries.monomial(coords, order, Monomial(t * c, key))
            bottom = 1 - TruncSeries.monomial(coords, order, Monomial(c, key))
            result = result * top * bottom.invert()
        else:
            flipped = tuple(-e for e in key)
            top = 1 - TruncSeries.monomial(coords, order, Monomial(divide(ONE, t * c), flipped))
            bottom = 1 - TruncSeries.monomial(coords, order, Monomial(divide(ONE, c), flipped))
            result = (result * top * bottom.invert()).scale(t)
    return result


def tuple_sigma_series(T: PartitionTuple, q: Scalar, t: Scalar, order: int) -> TruncSeries:
    """The Nekrasov ratio of ``T`` expanded in sigma up to total degree ``order``."""
    n = T.n
    coords = CoordSystem.cyclic(n)
    result = TruncSeries.one(coords, order)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for f in nekrasov_block_factors(j - i, T.component(i), T.component(j), n):
                result = result * _factor_ratio(f, i, j, q, t, coords, order, T)
                if result.is_zero():
                    return result
    return result


def phi_dual_expand(n: int, q: Scalar, t: Scalar, dy: int, dsigma: int) -> DualTable:
    """Coefficients of phi(x, p | s, kappa | q, t) at (y-key, sigma-key) up to (dy, dsigma)."""
    check_order(dy)
    check_order(dsigma)
    by_key: Dict[Key, TruncSeries] = {}
    for d, tuples in iter_tuples(n, dy):
        series = TruncSeries.zero(CoordSystem.cyclic(n), dsigma)
        for T in tuples:
            series = series + tuple_sigma_series(T, q, t, dsigma)
        series = series.scale(t ** (-sum(d)))
        if not series.is_zero():
            by_key[d] = series
    prefactor = normalizing_prefactor(n, q, t, dy)
    table: DualTable = {}
    for pkey, pvalue in prefactor.items():
        for fkey, series in by_key.items():
            ykey = tuple(a + b for a, b in zip(pkey, fkey))
            if sum(ykey) > dy:
                continue
            for skey, value in series.items():
                table[(ykey, skey)] = table.get((ykey, skey), ZERO) + pvalue * value
    logger.debug(f"phi_dual_expand N={n} ({dy},{dsigma}): {len(table)} terms")
    return {k: v for k, v in sorted(table.items()) if v}


def asymmetric_entries(table: DualTable, bound: int) -> List[Tuple[Key, Key, Scalar, Scalar]]:
    """Entries of bidegree <= (bound, bound) whose mirror (e, d) holds a different value."""
    witnesses = []
    for (d, e), value in table.items():
        if sum(d) > bound or sum(e) > bound:
            continue
        mirror = table.get((e, d), ZERO)
        if mirror != value:
            witnesses.append((d, e, value, mirror))
    return witnesses
