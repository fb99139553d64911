# Built-in Imports
from fractions import Fraction

# Third-party Imports
import sympy

# Internal Imports
from ...operators import ThetaTable, h_beta_potential
from ...qseries import (
    CoordSystem,
    Monomial,
    euler_product,
    theta_at_one,
    theta_expand,
    v0_coefficients,
    v_potential,
)
from ...scalar import ONE
from ..context import CheckContext
from ..registry import CheckKind, register


def _arcs(n: int):
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


@register("theta-heat", CheckKind.PROVEN, orders=(8, 6))
def theta_heat(ctx: CheckContext):
    """p d/dp Theta_P(w) = (N/2) Theta^(2) - ((N - 2(j-i))/2) Theta^(1) on every arc."""
    n, order = ctx.n, ctx.order
    coords = CoordSystem.cyclic(n)
    for _ in range(ctx.trials):
        for i, j in _arcs(n):
            w = Monomial(ctx.sampler.rational(signed=True), coords.arc(i, j))
            theta = theta_expand(w, coords, order)
            lhs = theta.p_derivative()
            rhs = theta_expand(w, coords, order, 2).scale(Fraction(n, 2)) - theta_expand(
                w, coords, order, 1
            ).scale(Fraction(n - 2 * (j - i), 2))
            ctx.compare(lhs, rhs, f"c={w.prefactor},arc={i}{j}")


@register("theta-threebody", CheckKind.PROVEN, orders=(4, 4), min_n=3, suite_ns=(3,))
def theta_threebody(ctx: CheckContext):
    """The three-body theta sum reduces to two-body terms plus the nome constant."""
    table = ThetaTable(CoordSystem.cyclic(ctx.n), ctx.order)
    lhs = h_beta_potential(table, ctx.n, ONE, three_body=True)
    rhs = h_beta_potential(table, ctx.n, ONE, three_body=False)
    ctx.compare(lhs, rhs, "three-body")


@register("theta-lemmas", CheckKind.PROVEN, orders=(6, 6))
def theta_lemmas(ctx: CheckContext):
    """Theta^(k)_P(1), reflection w -> P/w, V(Pw) = V(w) and the V_0 constant."""
    n, order = ctx.n, ctx.order
    nome = CoordSystem.nome()
    cube = -(euler_product(nome, order) ** 3)
    for k in (1, 2):
        ctx.compare(theta_at_one(k, nome, order), cube, f"Theta^({k})(1)")

    coords = CoordSystem.cyclic(n)
    for _ in range(ctx.trials):
        for i, j in _arcs(n):
            c = ctx.sampler.rational(signed=True)
            w = Monomial(c, coords.arc(i, j))
            reflected = Monomial(ONE / c, coords.coarc(i, j))
            label = f"c={c},arc={i}{j}"
            for derivative, sign in ((0, 1), (1, -1), (2, 1)):
                lhs = theta_expand(reflected, coords, order, derivative)
                rhs = theta_expand(w, coords, order, derivative).scale(sign)
                ctx.compare(lhs, rhs, f"Theta^({derivative}) {label}")
            V = v_potential(w, coords, order)
            ctx.compare(v_potential(reflected, coords, order), V, f"V(P/w) {label}")
            ctx.compare(v_potential(w, coords, order, shift=1), V, f"V(Pw) {label}")

    table = ThetaTable(coords, order)
    ctx.compare(table.v0(), table.nome_log_derivative().scale(Fraction(2, 3 * n)), "V_0")


@register("v0-series", CheckKind.PROVEN, orders=(7, 7), suite_ns=(2,))
def v0_series_check(ctx: CheckContext):
    """V_0(P) = -2 sum_k sigma(k) P^k."""
    coefficients = v0_coefficients(ctx.order)
    for k, value in enumerate(coefficients, start=1):
        ctx.equal(value, -2 * int(sympy.divisor_sigma(k)), (k,), "P^k")
    ctx.extra["coefficients"] = [str(v) for v in coefficients]
