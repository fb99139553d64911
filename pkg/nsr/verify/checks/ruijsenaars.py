"""Checks on f itself: the kappa = 0 product, both dualities, the stationary
limit and the evaluation formula."""
# Built-in Imports
from fractions import Fraction

# Internal Imports
from ... import config
from ...operators import TwistedSeries, eigen_extract, ruijsenaars_apply
from ...scalar import RatFunc
from ...specialfn import (
    asymmetric_entries,
    evaluation_compare,
    f_hat,
    f_hat_kappa0,
    f_stationary,
    phi_dual_expand,
    phi_hat,
)
from ..context import CheckContext
from ..registry import CheckKind, register
from ..sampling import TWISTED


@register("kappa0", CheckKind.PROVEN, orders=(4, 3))
def kappa0(ctx: CheckContext):
    """f at kappa = 0 equals the closed double product."""
    for _ in range(ctx.trials):
        point = ctx.point()
        symbolic = point.replace(kappa=RatFunc.generator())
        lhs = f_hat(symbolic, ctx.order).evaluate(Fraction(0))
        rhs = f_hat_kappa0(ctx.n, point.q, point.t, ctx.order)
        ctx.compare(lhs, rhs, "kappa=0")


@register("poincare", CheckKind.CONJECTURE, orders=(3, 2))
def poincare(ctx: CheckContext):
    """phi is invariant under t -> q/t."""
    for _ in range(ctx.trials):
        point = ctx.point()
        lhs = phi_hat(point, ctx.order)
        rhs = phi_hat(point.with_t(point.q / point.t), ctx.order)
        ctx.compare(lhs, rhs, "t->q/t")


@register("bispectral", CheckKind.CONJECTURE, orders=(2, 2), suite_ns=(2,))
def bispectral(ctx: CheckContext):
    """phi is symmetric under (x, p) <-> (s, kappa) in the joint expansion."""
    bound = min(ctx.order, ctx.sigma_order)
    for _ in range(ctx.trials):
        point = ctx.point()
        table = phi_dual_expand(ctx.n, point.q, point.t, ctx.order, ctx.sigma_order)
        for d, e, value, mirror in asymmetric_entries(table, bound):
            ctx.witness(f"{d}|{e}", value, mirror, "mirror")
        ctx.extra["terms"] = len(table)


@register("stationary-regularity", CheckKind.CONJECTURE, orders=(3, 2))
def stationary_regularity(ctx: CheckContext):
    """f / alpha has no pole at kappa = 1 and alpha's P^k pole has order at most k."""
    for _ in range(ctx.trials):
        point = ctx.point().replace(kappa=RatFunc.generator())
        limit = f_stationary(point, ctx.order)
        for k, pole in sorted(limit.pole_orders.items()):
            ctx.expect(pole <= k, f"P^{k}", pole, f"<= {k}", "alpha pole")
        ctx.extra["pole_orders"] = {str(k): v for k, v in sorted(limit.pole_orders.items())}


@register("ruijsenaars-eigen", CheckKind.CONJECTURE, orders=(3, 2))
def ruijsenaars_eigen(ctx: CheckContext):
    """x^lambda f^st(q, q/t) has a uniform Ruijsenaars eigen-ratio led by sum s_i."""
    for _ in range(ctx.trials):
        point = ctx.point(TWISTED)
        symbolic = point.replace(kappa=RatFunc.generator()).with_t(point.q / point.t)
        stationary = f_stationary(symbolic, ctx.order).series
        F = TwistedSeries(point.qlam, stationary)
        report = eigen_extract(ruijsenaars_apply(F, point.q, point.t), F)
        if report.witness is not None:
            key, value = report.witness
            ctx.witness(key, value, 0, "non-uniform")
        ctx.equal(report.constant_term, point.eigenvalue_sum(), "P^0", "eigenvalue")
        ctx.extra["eigenvalue"] = [str(v) for v in report.eigenvalue_series]


@register("evaluation", CheckKind.CONJECTURE, orders=(6, 4), suite_ns=(2,))
def evaluation(ctx: CheckContext):
    """Partial sums at x = 1, p = 1/t stabilize on the closed product."""
    ctx.approximate = True
    order = min(ctx.order, int(config.get("verify.evaluation.max-order")))
    t = Fraction(config.get("verify.evaluation.t"))
    for _ in range(ctx.trials):
        q = ctx.sampler.proper()
        kappa = ctx.sampler.proper() / ctx.sampler.integer(4, 8)
        point = ctx.point(q=q, t=t, kappa=kappa)
        result = evaluation_compare(point, order)
        ctx.residual = max(ctx.residual or 0.0, result.residual)
        ctx.tolerance = result.increment
        ctx.expect(
            result.approx_pass,
            f"S_{order}",
            repr(result.partial_sums[-1]),
            repr(result.closed_form),
            "residual",
        )
