"""Affine q-Toda operators in y_i = p~ x_{i+1}/x_i."""
# Built-in Imports
from typing import Sequence, Tuple

# Internal Imports
from ..exceptions import MissingRootError
from ..qseries import CYCLIC, CoordSystem, Monomial, TruncSeries, infinite_poch_expand
from ..scalar import ONE, Scalar
from .twisted import TwistedSeries, q_shift


def _unit(coords: CoordSystem, i: int) -> Tuple[int, ...]:
    return tuple(1 if a == i - 1 else 0 for a in range(coords.arity))


def toda_apply(F: TwistedSeries, q: Scalar) -> TwistedSeries:
    """D^Toda = sum_i (1 - y_i) T_{q,x_i}."""
    coords = F.body.coords
    coords.require(CYCLIC)
    order = F.body.trunc
    result = TruncSeries.zero(coords, order)
    for i in range(1, coords.n + 1):
        y = TruncSeries.monomial(coords, order, Monomial(ONE, _unit(coords, i)))
        result = result + (1 - y) * q_shift(F, i, q)
    return F.with_body(result)


def toda_prefactor(coords: CoordSystem, q: Scalar, order: int) -> TruncSeries:
    """prod_i 1/(q y_i; q)_inf."""
    result = TruncSeries.one(coords, order)
    for i in range(1, coords.n + 1):
        result = result * infinite_poch_expand(
            Monomial(q, _unit(coords, i)), q, coords, order, inverse=True
        )
    return result


def _check_twist(F: TwistedSeries, lam: Sequence[int], r: Scalar):
    if any(int(l) != l for l in lam):
        raise ValueError(f"the q-Gaussian needs integer lambda, got {tuple(lam)}")
    expected = tuple(r ** (2 * int(l)) for l in lam)
    if expected != F.qlam:
        raise MissingRootError(f"twist {F.qlam} is not r^(2 lambda) for lambda={tuple(lam)}")


def gaussian_dilation(
    F: TwistedSeries, lam: Sequence[int], kappa: Scalar, r: Scalar
) -> TruncSeries:
    """q^Delta T_kappa: weight r^{sum (lambda_i + m_i)^2} kappa^{|d|}, with q = r^2."""
    _check_twist(F, lam, r)
    coords = F.body.coords

    def weight(d) -> Scalar:
        m = coords.x_exponents(d)
        return r ** sum((int(l) + e) ** 2 for l, e in zip(lam, m)) * kappa ** sum(d)

    return F.body.weight(weight)


def toda_nonstat_apply(
    F: TwistedSeries, lam: Sequence[int], q: Scalar, kappa: Scalar, r: Scalar
) -> TwistedSeries:
    """T(kappa) = prod_i (q y_i; q)_inf^{-1} q^Delta T_kappa."""
    coords = F.body.coords
    coords.require(CYCLIC)
    if r**2 != q:
        raise MissingRootError(f"q={q} is not r^2 for r={r}")
    body = gaussian_dilation(F, lam, kappa, r)
    return F.with_body(toda_prefactor(coords, q, F.body.trunc) * body)


def toda_eigenvalue(lam: Sequence[int], r: Scalar) -> Scalar:
    """q^{sum lambda_i^2 / 2} = r^{sum lambda_i^2}."""
    return r ** sum(int(l) ** 2 for l in lam)
