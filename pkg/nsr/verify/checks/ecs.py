# Built-in Imports
from fractions import Fraction
from typing import Sequence

# Internal Imports
from ...operators import EcsVariant, ThetaTable, TwistedSeries, eigen_extract, ecs_apply
from ...partition import DominantWeight
from ...qseries import CoordSystem, TruncSeries, euler_product
from ...scalar import ONE, RatFunc, Scalar
from ...specialfn import ParamPoint, f_ecs, f_ecs_stationary, gt_series, psi0
from ..context import CheckContext
from ..registry import CheckKind, register
from ..sampling import ECS
from .characters import default_weights


def half_square_sum(lam: Sequence[Scalar]) -> Scalar:
    total: Scalar = Fraction(0)
    for value in lam:
        total = total + value * value
    return total / 2


def weight_point(w: DominantWeight) -> ParamPoint:
    """beta = 1, k = -(K+N)/N and lambda_i = mu_i - K(N-i)/N."""
    n, level = w.n, w.level
    lam = tuple(
        Fraction(mu) - Fraction(level * (n - i), n) for i, mu in enumerate(w.mu_padded, start=1)
    )
    return ParamPoint.ecs(lam, Fraction(-(level + n), n), ONE)


@register("ecs-kernel", CheckKind.PROVEN, orders=(6, 9))
def ecs_kernel(ctx: CheckContext):
    """(-beta p d/dp + H^eCS) psi_0 / (P;P) = 0 for every beta."""
    coords = CoordSystem.cyclic(ctx.n)
    zeros = tuple(Fraction(0) for _ in range(ctx.n))
    table = ThetaTable(coords, ctx.order)
    for _ in range(ctx.trials):
        beta = ctx.point(ECS).beta
        body = psi0(ctx.n, beta, ctx.order) / euler_product(coords, ctx.order)
        lhs = ecs_apply(body, zeros, beta, EcsVariant.NON_STAT, k=-beta, table=table)
        ctx.compare(lhs, TruncSeries.zero(coords, ctx.order), f"beta={beta}")


@register("ecs-conjugation", CheckKind.PROVEN, orders=(3, 3), batch=3)
def ecs_conjugation(ctx: CheckContext):
    """psi_0 (H_beta + beta(beta-1) N V_0 / 2) psi_0^{-1} = H^eCS, both H_beta forms."""
    n, order = ctx.n, ctx.order
    coords = CoordSystem.cyclic(n)
    table = ThetaTable(coords, order)
    for _ in range(ctx.trials):
        point = ctx.point(ECS)
        lam, beta = point.lam, point.beta
        G = ctx.sampler.series(coords, order)
        ground = psi0(n, beta, order)

        three = ecs_apply(G, lam, beta, EcsVariant.H_BETA3, table=table)
        two = ecs_apply(G, lam, beta, EcsVariant.H_BETA2, table=table)
        ctx.compare(three, two, "H_beta3-H_beta2")

        shift = table.v0().scale(beta * (beta - 1) * Fraction(n, 2))
        lhs = ground * (three + shift * G)
        rhs = ecs_apply(ground * G, lam, beta, EcsVariant.H_ECS, table=table)
        ctx.compare(lhs, rhs, "psi_0 conjugation")


@register("ecs-nonstationary", CheckKind.CONJECTURE, orders=(2, 2), suite_ns=(2,))
def ecs_nonstationary(ctx: CheckContext):
    """(k p d/dp + H^eCS) x^lambda psi_0 f^eCS = (1/2) sum lambda_i^2 x^lambda psi_0 f^eCS."""
    for _ in range(ctx.trials):
        point = ctx.point(ECS)
        body = psi0(ctx.n, point.beta, ctx.order) * f_ecs(point, ctx.order)
        lhs = ecs_apply(body, point.lam, point.beta, EcsVariant.NON_STAT, k=point.k)
        ctx.compare(lhs, body.scale(half_square_sum(point.lam)), "H F - e F")


@register("ecs-stationary", CheckKind.CONJECTURE, orders=(3, 2))
def ecs_stationary(ctx: CheckContext):
    """f^eCS / alpha at k = 0 gives a uniform H^eCS eigen-ratio led by sum lambda_i^2 / 2."""
    for _ in range(ctx.trials):
        point = ctx.point(ECS)
        stationary = f_ecs_stationary(point.replace(k=RatFunc.generator()), ctx.order)
        body = psi0(ctx.n, point.beta, ctx.order) * stationary.series
        opF = ecs_apply(body, point.lam, point.beta, EcsVariant.H_ECS)
        report = eigen_extract(TwistedSeries.untwisted(opF), TwistedSeries.untwisted(body))
        if report.witness is not None:
            key, value = report.witness
            ctx.witness(key, value, 0, "non-uniform")
        ctx.equal(report.constant_term, half_square_sum(point.lam), "P^0", "eigenvalue")
        ctx.extra["eigenvalue"] = [str(v) for v in report.eigenvalue_series]


@register("ecs-heat", CheckKind.PROVEN, orders=(4, 3))
def ecs_heat(ctx: CheckContext):
    """At beta = 1 the Weyl-Kac numerator psi_0 * ch / (P;P) solves the heat equation."""
    weight = ctx.weight()
    weights = [weight] if weight is not None else default_weights(ctx.n)
    for w in weights:
        point = weight_point(w)
        ctx.points.append(point)
        body = psi0(ctx.n, ONE, ctx.order) * gt_series(w, ctx.order)
        lhs = ecs_apply(body, point.lam, ONE, EcsVariant.NON_STAT, k=point.k)
        ctx.compare(lhs, body.scale(half_square_sum(point.lam)), f"K={w.level},mu={w.mu}")
