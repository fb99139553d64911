from fractions import Fraction

import pytest

import nsr
from nsr.exceptions import PoleError
from nsr.partition import DominantWeight, partition_count
from nsr.qseries import CoordSystem, TruncSeries
from nsr.scalar import RatFunc
from nsr.specialfn import (
    FunctionTag,
    ParamPoint,
    alpha_const,
    build_function,
    f_hat,
    f_hat_kappa0,
    f_macdonald,
    f_toda_stationary,
    gt_series,
    normalizing_prefactor,
    psi0,
)

logger = nsr._logger.getLogger("nsr")

pytestmark = [pytest.mark.unit]


def test_f_starts_at_one(generic_point):
    f = f_hat(generic_point, 2)
    assert f.constant_term() == 1
    assert f.coords == CoordSystem.cyclic(2)


def test_alpha_is_the_uniform_part(generic_point):
    assert alpha_const(generic_point, 2) == f_hat(generic_point, 2).uniform_part()


def test_kappa_zero_product(generic_point):
    symbolic = generic_point.replace(kappa=RatFunc.generator())
    lhs = f_hat(symbolic, 2).evaluate(Fraction(0))
    assert lhs == f_hat_kappa0(2, generic_point.q, generic_point.t, 2)


def test_normalizing_prefactor_is_the_inverse():
    q, t = Fraction(2, 7), Fraction(3, 11)
    product = normalizing_prefactor(3, q, t, 4) * f_hat_kappa0(3, q, t, 4)
    assert product == TruncSeries.one(CoordSystem.cyclic(3), 4)


def test_macdonald_series_lives_in_finite_coordinates(generic_point):
    f = f_macdonald(2, generic_point.s, generic_point.q, generic_point.t, 3)
    assert f.coords == CoordSystem.finite(2)
    assert f.constant_term() == 1


def test_psi0_powers():
    assert psi0(2, 0, 4) == TruncSeries.one(CoordSystem.cyclic(2), 4)
    half = psi0(2, Fraction(1, 2), 4)
    assert half * half == psi0(2, 1, 4)
    assert psi0(3, 1, 3).constant_term() == 1


def test_level_zero_character_is_the_partition_generating_function():
    series = gt_series(DominantWeight(2, 0), 6)
    assert series.nome_coefficients() == [partition_count(k) for k in range(4)]
    assert series.is_uniform()


def test_build_function_dispatch(generic_point):
    assert build_function(FunctionTag.FHAT, generic_point, 2) == f_hat(generic_point, 2)
    with pytest.raises(ValueError):
        build_function(FunctionTag.PSI0, generic_point, 2)
    ground = build_function(FunctionTag.PSI0, ParamPoint(n=2, beta=Fraction(1, 2)), 3)
    assert ground == psi0(2, Fraction(1, 2), 3)


def test_toda_stationary_limit_off_the_q_lattice():
    r = Fraction(2, 3)
    s = (Fraction(5, 7), Fraction(3, 11), Fraction(13, 17))
    point = ParamPoint.toda_spectral(3, r, s, RatFunc.generator())
    limit = f_toda_stationary(point, 2)
    assert limit.series.constant_term() == 1


def test_toda_stationary_limit_on_the_q_lattice_has_a_pole():
    point = ParamPoint.toda(3, Fraction(2, 3), (2, 1, 0), RatFunc.generator())
    with pytest.raises(PoleError):
        f_toda_stationary(point, 2)
