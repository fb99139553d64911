# Built-in Imports
from typing import List

# Internal Imports
from ...nekrasov import (
    block_value,
    ch_denominator_character,
    ch_tangent,
    evaluate_factors,
    full_factors,
    nekrasov_box,
)
from ...partition import (
    DominantWeight,
    Partition,
    PartitionTuple,
    enumerate_partitions,
    enumerate_tuples_of_size,
    partition_count,
    to_cylindric,
)
from ...qseries import CoordSystem, TruncSeries
from ...scalar import ONE, RatFunc
from ...specialfn import ParamPoint, f_hat, gt_series
from ..context import CheckContext
from ..registry import CheckKind, register
from ..sampling import DOMINANT

MAX_RANDOM_SIZE = 6


def default_weights(n: int) -> List[DominantWeight]:
    weights = [DominantWeight(n, 1)]
    if n == 2:
        # K + mu_N - mu_1 >= 0 rules out level 0 with mu = (1)
        weights.append(DominantWeight(n, 1, Partition((1,))))
    return weights


def _random_partition(ctx: CheckContext, bound: int) -> Partition:
    return ctx.sampler.choice(enumerate_partitions(ctx.sampler.integer(0, bound)))


def _random_tuple(ctx: CheckContext, bound: int) -> PartitionTuple:
    return ctx.sampler.choice(enumerate_tuples_of_size(ctx.n, ctx.sampler.integer(0, bound)))


@register("char-gl1", CheckKind.PROVEN, orders=(8, 6))
def char_gl1(ctx: CheckContext):
    """f(x, p | 1, 1/t | q, q/t) = 1/(P;P): p(k) on (k, ..., k), zero elsewhere."""
    coords = CoordSystem.cyclic(ctx.n)
    expected = TruncSeries(
        coords,
        ctx.order,
        {coords.uniform(k): partition_count(k) for k in range(ctx.order // ctx.n + 1)},
    )
    for _ in range(ctx.trials):
        sampled = ctx.point()
        point = ParamPoint(
            n=ctx.n, q=sampled.q, t=sampled.q / sampled.t, kappa=ONE / sampled.t
        )
        series = f_hat(point, ctx.order)
        ctx.compare(series, expected, "p(k)")
    ctx.extra["uniform"] = [str(c) for c in series.nome_coefficients()]


@register("char-glN", CheckKind.PROVEN, orders=(4, 4))
def char_glN(ctx: CheckContext):
    """At the dominant point, t -> q gives the affine Gelfand-Tsetlin counts."""
    tau = RatFunc.generator()
    weight = ctx.weight()
    weights = [weight] if weight is not None else default_weights(ctx.n)
    for w in weights:
        for _ in range(ctx.trials):
            point = ctx.point(DOMINANT, weight=w, t=tau)
            series = f_hat(point.with_t(point.q / tau), ctx.order).evaluate(point.q)
            ctx.compare(series, gt_series(w, ctx.order), f"K={w.level},mu={w.mu}")


@register("ch-identity", CheckKind.PROVEN, orders=(6, 6), batch=50)
def ch_identity(ctx: CheckContext):
    """Both closed forms of the tangent character agree with the denominator's."""
    for _ in range(ctx.trials):
        T = _random_tuple(ctx, min(ctx.order, MAX_RANDOM_SIZE))
        A, B = ch_tangent(T, "A"), ch_tangent(T, "B")
        ctx.expect(A == B, str(T), A.terms(), B.terms(), "A=B")
        denominator = ch_denominator_character(T)
        ctx.expect(denominator == A, str(T), denominator.terms(), A.terms(), "L(den)")
        _, valid = to_cylindric(T)
        if valid:
            ctx.equal(A.dimension(), 2 * T.size, str(T), "dim")


@register("nekrasov-factorization", CheckKind.PROVEN, orders=(6, 6), batch=200)
def nekrasov_factorization(ctx: CheckContext):
    """N_{lam,mu} is the product of its N cyclic blocks and box form = Pochhammer form."""
    bound = min(ctx.order, MAX_RANDOM_SIZE)
    for _ in range(ctx.trials):
        lam, mu = _random_partition(ctx, bound), _random_partition(ctx, bound)
        u, q, kappa = ctx.sampler.vector(3)
        box = nekrasov_box(lam, mu, u, q, kappa)
        pochs = evaluate_factors(full_factors(lam, mu), u, q, kappa)
        key = f"{lam}|{mu}"
        ctx.equal(box, pochs, key, "box")
        blocks = ONE
        for k in range(ctx.n):
            blocks = blocks * block_value(k, lam, mu, u, q, kappa, ctx.n)
        ctx.equal(blocks, pochs, key, "blocks")
