"""Elliptic Sutherland and Calogero-Sutherland Hamiltonians on x^lambda * body.

The Euler operators theta_i act on the coefficient at d as lambda_i + m_i(d),
so lambda enters additively and never has to be a power of q.
"""
# Built-in Imports
import logging
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

# Internal Imports
from .. import _logger
from ..qseries import (
    CYCLIC,
    CoordSystem,
    Monomial,
    TruncSeries,
    theta_at_one,
    theta_expand,
    v0_series,
    v_potential,
)
from ..scalar import ONE, Scalar
from .twisted import euler_weight

logger: logging.Logger = _logger.getLogger("nsr-series")


class EcsVariant(Enum):
    H_BETA3 = "H_beta3"
    H_BETA2 = "H_beta2"
    H_ECS = "H_eCS"
    NON_STAT = "NonStat"


class ThetaTable:
    """Theta log-derivatives and potentials on the arcs of one coordinate system."""

    def __init__(self, coords: CoordSystem, order: int):
        coords.require(CYCLIC)
        self.coords = coords
        self.order = order
        self._first: Dict[Tuple[int, int], TruncSeries] = {}
        self._second: Dict[Tuple[int, int], TruncSeries] = {}
        self._v: Dict[Tuple[int, int], TruncSeries] = {}
        self._c: Optional[TruncSeries] = None

    def _inverse(self, i: int, j: int) -> TruncSeries:
        w = Monomial(ONE, self.coords.arc(i, j))
        return theta_expand(w, self.coords, self.order).invert()

    def first(self, i: int, j: int) -> TruncSeries:
        """Theta^(1)/Theta at p^{j-i} x_j/x_i."""
        if (i, j) not in self._first:
            w = Monomial(ONE, self.coords.arc(i, j))
            self._first[(i, j)] = theta_expand(w, self.coords, self.order, 1) * self._inverse(i, j)
        return self._first[(i, j)]

    def second(self, i: int, j: int) -> TruncSeries:
        """Theta^(2)/Theta at p^{j-i} x_j/x_i."""
        if (i, j) not in self._second:
            w = Monomial(ONE, self.coords.arc(i, j))
            self._second[(i, j)] = theta_expand(w, self.coords, self.order, 2) * self._inverse(i, j)
        return self._second[(i, j)]

    def potential(self, i: int, j: int) -> TruncSeries:
        if (i, j) not in self._v:
            self._v[(i, j)] = v_potential(Monomial(ONE, self.coords.arc(i, j)), self.coords, self.order)
        return self._v[(i, j)]

    def nome_log_derivative(self) -> TruncSeries:
        """(p d/dp Theta^(1)_P(1)) / Theta^(1)_P(1); p d/dp is N P d/dP."""
        if self._c is None:
            at_one = theta_at_one(1, self.coords, self.order)
            self._c = at_one.p_derivative() / at_one
        return self._c

    def v0(self) -> TruncSeries:
        return v0_series(self.coords, self.order)


def _pairs(n: int):
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def _kinetic(body: TruncSeries, lam: Sequence[Scalar]) -> Tuple[TruncSeries, Dict[int, TruncSeries]]:
    n = body.coords.n
    thetas = {i: euler_weight(body, i, lam) for i in range(1, n + 1)}
    total = TruncSeries.zero(body.coords, body.trunc)
    for i in range(1, n + 1):
        total = total + euler_weight(thetas[i], i, lam)
    return total.scale(Fraction(1, 2)), thetas


def _three_body(table: ThetaTable, n: int) -> TruncSeries:
    coords, order = table.coords, table.order
    result = TruncSeries.zero(coords, order)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                a_ij, a_ik, a_jk = table.first(i, j), table.first(i, k), table.first(j, k)
                result = result + a_ij * a_ik - a_ij * a_jk + a_ik * a_jk
    return result


def _two_body_reduction(table: ThetaTable, n: int) -> TruncSeries:
    """The three-body sum recast with two-body terms and the nome constant."""
    result = TruncSeries.zero(table.coords, table.order)
    for i, j in _pairs(n):
        result = result + table.second(i, j).scale(Fraction(n - 2, 2))
        result = result - table.first(i, j).scale(Fraction(n - 2 * (j - i), 2))
    return result - table.nome_log_derivative().scale(Fraction((n - 1) * (n - 2), 6))


def h_beta_potential(table: ThetaTable, n: int, beta: Scalar, three_body: bool = True) -> TruncSeries:
    """The multiplicative part beta^2 (sum B_ij + three-body) of H_beta."""
    result = TruncSeries.zero(table.coords, table.order)
    for i, j in _pairs(n):
        result = result + table.second(i, j)
    result = result + (_three_body(table, n) if three_body else _two_body_reduction(table, n))
    return result.scale(beta * beta)


def ecs_potential(table: ThetaTable, n: int, beta: Scalar) -> TruncSeries:
    """beta(beta-1) (sum V(arc) + N V_0(P) / 2)."""
    result = table.v0().scale(Fraction(n, 2))
    for i, j in _pairs(n):
        result = result + table.potential(i, j)
    return result.scale(beta * (beta - 1))


def ecs_apply(
    body: TruncSeries,
    lam: Sequence[Scalar],
    beta: Scalar,
    variant: EcsVariant,
    k: Optional[Scalar] = None,
    table: Optional[ThetaTable] = None,
) -> TruncSeries:
    """Body of H(x^lambda body) / x^lambda for the selected Hamiltonian."""
    coords = body.coords
    coords.require(CYCLIC)
    n = coords.n
    table = table or ThetaTable(coords, body.trunc)
    kinetic, thetas = _kinetic(body, lam)
    if variant in (EcsVariant.H_BETA3, EcsVariant.H_BETA2):
        result = kinetic
        for i, j in _pairs(n):
            result = result - (table.first(i, j) * (thetas[i] - thetas[j])).scale(beta)
        potential = h_beta_potential(table, n, beta, variant == EcsVariant.H_BETA3)
        return result + potential * body
    result = kinetic + ecs_potential(table, n, beta) * body
    if variant == EcsVariant.NON_STAT:
        if k is None:
            raise ValueError("the non-stationary Hamiltonian needs k")
        result = result + body.p_derivative().scale(k)
    return result
