# Built-in Imports
from typing import Dict

# Internal Imports
from ...operators import TwistedSeries, macdonald_apply
from ...qseries import CoordSystem, TruncSeries
from ...scalar import ZERO
from ...specialfn import asymmetric_entries, f_hat, f_macdonald, macdonald_dual_table
from ..context import CheckContext
from ..registry import CheckKind, register
from ..sampling import TWISTED


def finite_part(series: TruncSeries) -> TruncSeries:
    """Keys with d_N = 0, read as z_i = x_{i+1}/x_i."""
    n = series.coords.n
    coeffs: Dict = {key[:-1]: value for key, value in series.items() if key[-1] == 0}
    return TruncSeries(CoordSystem.finite(n), series.trunc, coeffs)


@register("macdonald-eigen", CheckKind.PROVEN, orders=(4, 4))
def macdonald_eigen(ctx: CheckContext):
    """x^lambda f^{gl_N} is a Macdonald eigenfunction with eigenvalue sum s_i."""
    for _ in range(ctx.trials):
        point = ctx.point(TWISTED)
        F = TwistedSeries(point.qlam, f_macdonald(ctx.n, point.s, point.q, point.t, ctx.order))
        lhs = macdonald_apply(F, point.q, point.t).body
        ctx.compare(lhs, F.body.scale(point.eigenvalue_sum()), "D F - e F")


@register("macdonald-duality", CheckKind.PROVEN, orders=(2, 2))
def macdonald_duality(ctx: CheckContext):
    """phi^{gl_N} is bispectral and invariant under t -> q/t."""
    bound = min(ctx.order, ctx.sigma_order)
    for _ in range(ctx.trials):
        point = ctx.point()
        q, t = point.q, point.t
        table = macdonald_dual_table(ctx.n, q, t, ctx.order, ctx.sigma_order)
        for d, e, value, mirror in asymmetric_entries(table, bound):
            ctx.witness(f"{d}|{e}", value, mirror, "mirror")
        dual = macdonald_dual_table(ctx.n, q, q / t, ctx.order, ctx.sigma_order)
        for key in sorted(set(table) | set(dual)):
            ctx.equal(table.get(key, ZERO), dual.get(key, ZERO), f"{key[0]}|{key[1]}", "t->q/t")


@register("macdonald-limit", CheckKind.PROVEN, orders=(3, 3))
def macdonald_limit(ctx: CheckContext):
    """At s_i -> kappa^{N-i} s_i and x -> p^delta x, p -> 0, f becomes f^{gl_N}(q, q/t)."""
    n = ctx.n
    for _ in range(ctx.trials):
        point = ctx.point()
        shifted = tuple(point.kappa ** (n - i) * point.s[i - 1] for i in range(1, n + 1))
        lhs = finite_part(f_hat(point.replace(s=shifted), ctx.order))
        rhs = f_macdonald(n, point.s, point.q, point.q / point.t, ctx.order)
        ctx.compare(lhs, rhs, "d_N=0")
