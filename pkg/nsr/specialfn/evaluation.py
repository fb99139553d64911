"""Numeric sides of the evaluation formula at x = (1, ..., 1), p = 1/t.

The series side sums f(1, ..., 1, 1/t | s, kappa | q, q/t) degree by degree in
exact arithmetic and converts each partial sum; the product side is evaluated
with mpmath q-Pochhammer symbols.
"""
# Built-in Imports
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List

# Third-party Imports
from mpmath import mp

# Internal Imports
from .. import _logger, config
from ..scalar import ZERO, Scalar, is_symbolic
from .params import ParamPoint
from .ruijsenaars import f_hat

logger: logging.Logger = _logger.getLogger("nsr-series")


def _mpf(value: Scalar):
    if is_symbolic(value):
        raise ValueError(f"numeric evaluation needs rational parameters, got {value}")
    value = Fraction(value)
    return mp.mpf(value.numerator) / value.denominator


def _require_rational(point: ParamPoint):
    for value in (point.q, point.t, point.kappa) + point.spectral():
        _mpf(value)


def evaluation_partial_sums(point: ParamPoint, order: int) -> List[Fraction]:
    """Exact partial sums S_0, ..., S_order of the series side.

    ``point.t`` is the t of the identity; the series is built at the t-slot q/t
    and every y_i is set to 1/t.
    """
    _require_rational(point)
    series = f_hat(point.with_t(point.q / point.t), order)
    by_degree = [ZERO] * (order + 1)
    for key, value in series.items():
        by_degree[sum(key)] += value * (1 / point.t) ** sum(key)
    sums: List[Fraction] = []
    total: Scalar = ZERO
    for value in by_degree:
        total = total + value
        sums.append(Fraction(total))
    return sums


def _double_qp(u, q, p):
    """(u; q, p)_inf, stopping once u p^b is below the working precision."""
    result = mp.mpf(1)
    shift = u
    while abs(shift) > mp.eps:
        result *= mp.qp(shift, q)
        shift *= p
    return result


def evaluation_closed_form(point: ParamPoint):
    """The infinite-product side of the evaluation formula as an mpmath number."""
    _require_rational(point)
    n = point.n
    q, t, kappa = _mpf(point.q), _mpf(point.t), _mpf(point.kappa)
    s = [_mpf(v) for v in point.spectral()]
    big = kappa**n
    value = 1 / mp.qp(big, big)
    value *= mp.qp(q / t, q) ** n
    value *= (_double_qp(big * q / t, q, big) / _double_qp(big * q, q, big)) ** n
    for i in range(n):
        for j in range(i + 1, n):
            near = kappa ** (j - i) * q * s[j] / s[i]
            far = kappa ** (n - j + i) * q * s[i] / s[j]
            value *= _double_qp(near / t, q, big) / _double_qp(near, q, big)
            value *= _double_qp(far / t, q, big) / _double_qp(far, q, big)
    return value


@dataclass
class EvaluationResult:
    partial_sums: List[float]
    closed_form: float
    residual: float
    increment: float
    approx_pass: bool


def evaluation_compare(point: ParamPoint, order: int) -> EvaluationResult:
    """Relative residual of the last partial sum against the last relative increment."""
    old = mp.dps
    try:
        mp.dps = int(config.get("verify.evaluation.dps"))
        sums = [_mpf(v) for v in evaluation_partial_sums(point, order)]
        closed = evaluation_closed_form(point)
        last = sums[-1]
        residual = abs(last - closed) / abs(closed)
        increment = abs(last - sums[-2]) / abs(last) if len(sums) > 1 else mp.inf
        approx_pass = bool(residual < increment or residual < mp.mpf("1e-12"))
        logger.debug(f"evaluation residual={mp.nstr(residual, 6)} increment={mp.nstr(increment, 6)}")
        return EvaluationResult(
            partial_sums=[float(v) for v in sums],
            closed_form=float(closed),
            residual=float(residual),
            increment=float(increment),
            approx_pass=approx_pass,
        )
    finally:
        mp.dps = old
