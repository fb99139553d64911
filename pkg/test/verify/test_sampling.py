from fractions import Fraction

import pytest

import nsr
from nsr.exceptions import UnsatisfiableConstraintsError
from nsr.partition import DominantWeight, Partition
from nsr.qseries import CoordSystem
from nsr.verify import Constraints, ParamSampler, sample_params
from nsr.verify.sampling import DOMINANT, ECS, TODA, TWISTED, weight_from

logger = nsr._logger.getLogger("nsr")

pytestmark = [pytest.mark.unit]


def test_same_seed_same_point():
    c = Constraints(3)
    assert sample_params(11, c) == sample_params(11, c)
    assert sample_params(11, c) != sample_params(12, c)


def test_attempts_draw_different_points():
    a = ParamSampler(4, attempt=0).sample(Constraints(2))
    b = ParamSampler(4, attempt=1).sample(Constraints(2))
    assert a != b


def test_draws_respect_the_bound():
    sampler = ParamSampler(0, bound=5)
    for _ in range(50):
        value = sampler.rational()
        assert value != 1
        assert 1 <= value.numerator <= 5 and value.denominator <= 5
        assert 0 < sampler.proper() < 1


def test_fixed_values_win():
    point = sample_params(1, Constraints(2, q=Fraction(1, 2)), fixed={"q": "2/9", "s": "1/3,1/5"})
    assert point.q == Fraction(2, 9)
    assert point.s == (Fraction(1, 3), Fraction(1, 5))


def test_twisted_relation():
    point = sample_params(2, Constraints(3, TWISTED, lam=(2, 1, 0)))
    for i in range(1, 4):
        assert point.s[i - 1] == point.t ** (3 - i) * point.q ** (3 - i)
    with pytest.raises(UnsatisfiableConstraintsError):
        sample_params(2, Constraints(3, TWISTED, lam=(Fraction(1, 2), 0, 0)))


def test_dominant_relation():
    w = DominantWeight(2, 1, Partition((1,)))
    point = sample_params(3, Constraints(2, DOMINANT, weight=w))
    assert point.q == point.r**2
    assert point.kappa == 1 / (point.r * point.t)
    with pytest.raises(UnsatisfiableConstraintsError):
        sample_params(3, Constraints(2, DOMINANT))
    with pytest.raises(UnsatisfiableConstraintsError):
        sample_params(3, Constraints(3, DOMINANT, weight=w))


def test_toda_relation():
    point = sample_params(4, Constraints(2, TODA, lam=(3, -1)))
    assert point.q == point.r**2
    assert point.s == (point.q**3, point.q**-1)


def test_ecs_relation():
    point = sample_params(5, Constraints(2, ECS), fixed={"beta": "3/2"})
    assert point.beta == Fraction(3, 2)
    assert len(point.lam) == 2
    assert point.k is not None


def test_unknown_relation_and_parameter():
    with pytest.raises(UnsatisfiableConstraintsError):
        sample_params(0, Constraints(2, "elliptic"))
    with pytest.raises(ValueError):
        ParamSampler(0, fixed={"zeta": "1"})


def test_weight_parameters():
    assert weight_from(2, {}) is None
    assert weight_from(2, {"level": "1", "mu": "1"}) == DominantWeight(2, 1, Partition((1,)))
    with pytest.raises(UnsatisfiableConstraintsError):
        weight_from(2, {"level": "0", "mu": "1"})


def test_random_series_has_unit_constant_term():
    s = ParamSampler(9).series(CoordSystem.cyclic(2), 3)
    assert s.constant_term() == 1
    assert len(s) == len(CoordSystem.cyclic(2).keys(3))


def test_generic_toda_spectral_draw():
    point = sample_params(4, Constraints(3, TODA, generic=True))
    assert point.q == point.r**2
    assert point.qlam == point.s
    assert not point.lam
    lattice = {point.q**m for m in range(-12, 13)}
    for i in range(3):
        for j in range(3):
            if i != j:
                assert point.s[j] / point.s[i] not in lattice


def test_generic_toda_keeps_an_explicit_lambda():
    point = sample_params(4, Constraints(2, TODA, generic=True), fixed={"lam": "1,0"})
    assert point.s == (point.q, 1)
