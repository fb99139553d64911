# Built-in Imports
from fractions import Fraction
from typing import Tuple

# Internal Imports
from ...operators import (
    TwistedSeries,
    eigen_extract,
    gaussian_dilation,
    ruijsenaars_coefficient,
    toda_apply,
    toda_eigenvalue,
    toda_nonstat_apply,
    toda_prefactor,
)
from ...qseries import CoordSystem, Monomial, TruncSeries
from ...scalar import ONE, RatFunc
from ...specialfn import (
    ParamPoint,
    f_hat,
    f_toda,
    f_toda_stationary,
    f_toda_zero,
    scale_limit,
)
from ..context import CheckContext
from ..registry import CheckKind, register
from ..sampling import TODA


def _lam(point: ParamPoint) -> Tuple[int, ...]:
    return tuple(int(l) for l in point.lam)


@register("toda-limit", CheckKind.PROVEN, orders=(2, 2))
def toda_limit(ctx: CheckContext):
    """The t -> 0 limits of f and of the conjugated Ruijsenaars operator."""
    n, order = ctx.n, ctx.order
    coords = CoordSystem.cyclic(n)
    tau = RatFunc.generator()
    for _ in range(ctx.trials):
        point = ctx.point(TODA)
        closed = f_toda(point, order)

        # f(x, tau p~ | s, kappa | q, q/tau) at tau = 0
        ctx.compare(scale_limit(f_hat(point.with_t(point.q / tau), order)), closed, "f(q,q/t)")

        # q^Delta T_kappa maps x^lambda f^Toda onto the f(q, t) limit
        F = TwistedSeries(point.qlam, closed)
        lhs = gaussian_dilation(F, _lam(point), point.kappa, point.r)
        rhs = f_toda_zero(point, order).scale(toda_eigenvalue(_lam(point), point.r))
        ctx.compare(lhs, rhs, "q^Delta")

    # Each conjugated Ruijsenaars coefficient tends to 1 - y_i
    for i in range(1, n + 1):
        unit = tuple(1 if a == i - 1 else 0 for a in range(n))
        expected = 1 - TruncSeries.monomial(coords, order, Monomial(ONE, unit))
        coefficient = ruijsenaars_coefficient(coords, i, tau, order, tilde=True)
        ctx.compare(scale_limit(coefficient), expected, f"D~_{i}")


@register("toda-commutator", CheckKind.PROVEN, orders=(4, 3), batch=5)
def toda_commutator(ctx: CheckContext):
    """T(1) commutes with D^Toda on random twisted series; T(2) does not."""
    coords = CoordSystem.cyclic(ctx.n)
    noncommuting = False
    for _ in range(ctx.trials):
        point = ctx.point(TODA)
        lam, q, r = _lam(point), point.q, point.r
        F = TwistedSeries(point.qlam, ctx.sampler.series(coords, ctx.order))

        def commutator(kappa) -> Tuple[TruncSeries, TruncSeries]:
            after = toda_nonstat_apply(toda_apply(F, q), lam, q, kappa, r).body
            before = toda_apply(toda_nonstat_apply(F, lam, q, kappa, r), q).body
            return after, before

        ctx.compare(*commutator(ONE), "[T(1),D]")
        after, before = commutator(Fraction(2))
        noncommuting = noncommuting or after != before
    ctx.expect(noncommuting, "kappa=2", "commutes", "a non-commuting series", "[T(2),D]")


@register("toda-eigen", CheckKind.CONJECTURE, orders=(4, 3))
def toda_eigen(ctx: CheckContext):
    """x^lambda f^Toda is a T(kappa) eigenfunction with eigenvalue q^{|lambda|^2/2}."""
    for _ in range(ctx.trials):
        point = ctx.point(TODA)
        F = TwistedSeries(point.qlam, f_toda(point, ctx.order))
        lhs = toda_nonstat_apply(F, _lam(point), point.q, point.kappa, point.r).body
        rhs = F.body.scale(toda_eigenvalue(_lam(point), point.r))
        ctx.compare(lhs, rhs, "T F - e F")


@register("toda-poincare", CheckKind.CONJECTURE, orders=(4, 3))
def toda_poincare(ctx: CheckContext):
    """The two t -> 0 limits differ by prod_i (q y_i; q)_inf^{-1}."""
    coords = CoordSystem.cyclic(ctx.n)
    for _ in range(ctx.trials):
        point = ctx.point(TODA)
        lhs = toda_prefactor(coords, point.q, ctx.order) * f_toda_zero(point, ctx.order)
        ctx.compare(lhs, f_toda(point, ctx.order), "prefactor")


@register("toda-stationary", CheckKind.CONJECTURE, orders=(3, 2))
def toda_stationary(ctx: CheckContext):
    """f^Toda / alpha at kappa = 1 has a uniform D^Toda eigen-ratio led by sum s_i."""
    for _ in range(ctx.trials):
        point = ctx.point(TODA, generic=True)
        symbolic = point.replace(kappa=RatFunc.generator())
        F = TwistedSeries(point.qlam, f_toda_stationary(symbolic, ctx.order).series)
        report = eigen_extract(toda_apply(F, point.q), F)
        if report.witness is not None:
            key, value = report.witness
            ctx.witness(key, value, 0, "non-uniform")
        ctx.equal(report.constant_term, point.eigenvalue_sum(), "P^0", "eigenvalue")
        ctx.extra["eigenvalue"] = [str(v) for v in report.eigenvalue_series]
