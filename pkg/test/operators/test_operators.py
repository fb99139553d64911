from fractions import Fraction

import pytest

import nsr
from nsr.exceptions import CoordinateMismatchError, SeriesInversionError
from nsr.operators import (
    EcsVariant,
    ThetaTable,
    TwistedSeries,
    ecs_apply,
    eigen_extract,
    macdonald_apply,
    toda_apply,
)
from nsr.qseries import CoordSystem, TruncSeries, euler_product
from nsr.scalar import RatFunc
from nsr.specialfn import ParamPoint, f_macdonald, f_toda_stationary, psi0

from ..utils import series

logger = nsr._logger.getLogger("nsr")

pytestmark = [pytest.mark.unit]


def test_twist_length_is_checked():
    with pytest.raises(CoordinateMismatchError):
        TwistedSeries((Fraction(1),), TruncSeries.one(CoordSystem.cyclic(2), 2))


def test_eigen_extract_uniform_ratio():
    F = TwistedSeries.untwisted(series(2, 4, {(0, 0): 1, (1, 0): 3, (1, 1): 2}))
    report = eigen_extract(F.scale(Fraction(5, 2)), F)
    assert report.uniform
    assert report.witness is None
    assert report.constant_term == Fraction(5, 2)
    assert report.eigenvalue_series == [Fraction(5, 2), 0, 0]


def test_eigen_extract_witness():
    F = TwistedSeries.untwisted(series(2, 2, {(0, 0): 1}))
    opF = TwistedSeries.untwisted(series(2, 2, {(0, 0): 1, (0, 1): 7}))
    report = eigen_extract(opF, F)
    assert not report.uniform
    assert report.witness == ((0, 1), 7)
    with pytest.raises(SeriesInversionError):
        eigen_extract(F, TwistedSeries.untwisted(series(2, 2, {(1, 0): 1})))


@pytest.mark.parametrize("n", [2, 3])
def test_macdonald_eigenfunction(n):
    q, t = Fraction(2, 7), Fraction(3, 11)
    qlam = tuple(Fraction(5 + i, 3 + 2 * i) for i in range(n))
    point = ParamPoint.twisted(n, q, t, qlam)
    F = TwistedSeries(qlam, f_macdonald(n, point.s, q, t, 3))
    lhs = macdonald_apply(F, q, t).body
    assert lhs == F.body.scale(point.eigenvalue_sum())


def test_ecs_kernel_function():
    n, order, beta = 2, 4, Fraction(1, 2)
    coords = CoordSystem.cyclic(n)
    zeros = (Fraction(0),) * n
    body = psi0(n, beta, order) / euler_product(coords, order)
    lhs = ecs_apply(body, zeros, beta, EcsVariant.NON_STAT, k=-beta)
    assert lhs == TruncSeries.zero(coords, order)


def test_two_forms_of_h_beta_agree():
    coords = CoordSystem.cyclic(3)
    table = ThetaTable(coords, 3)
    lam = (Fraction(1, 2), Fraction(-1, 3), Fraction(2))
    G = series(3, 3, {(0, 0, 0): 1, (1, 0, 0): 2, (0, 1, 1): Fraction(-1, 5)})
    three = ecs_apply(G, lam, Fraction(3, 2), EcsVariant.H_BETA3, table=table)
    two = ecs_apply(G, lam, Fraction(3, 2), EcsVariant.H_BETA2, table=table)
    assert three == two


def test_toda_stationary_eigenvalue_is_the_spectral_sum():
    s = (Fraction(5, 7), Fraction(3, 11))
    point = ParamPoint.toda_spectral(2, Fraction(2, 3), s, RatFunc.generator())
    F = TwistedSeries(point.qlam, f_toda_stationary(point, 3).series)
    report = eigen_extract(toda_apply(F, point.q), F)
    assert report.witness is None
    assert report.constant_term == Fraction(76, 77)
