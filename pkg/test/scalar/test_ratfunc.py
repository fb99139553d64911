import pickle
from fractions import Fraction

import pytest

import nsr
from nsr.exceptions import PoleError, ScalarDivisionError
from nsr.scalar import RatFunc, divide, evaluate, is_symbolic, parse_scalar, poch_q, rising
from nsr.verify import ParamSampler

logger = nsr._logger.getLogger("nsr")

pytestmark = [pytest.mark.unit]

tau = RatFunc.generator()


def test_canonical_form_is_unique():
    a = (tau**2 - 1) / (tau - 1)
    b = tau + 1
    assert a == b
    assert hash(a) == hash(b)
    assert str(a) == str(b)


def test_monic_denominator():
    f = RatFunc.parse("1/(2*tau+4)")
    assert f == Fraction(1, 2) / (tau + 2)
    assert f.den.LC == 1


def test_mixed_arithmetic_with_fractions():
    f = Fraction(1, 3) / tau + 2
    assert f * tau == 2 * tau + Fraction(1, 3)
    assert 1 - tau == -(tau - 1)
    assert (tau ** -2) * tau**2 == 1


def test_constants_compare_with_fractions():
    assert (tau / tau) == 1
    assert RatFunc.constant(Fraction(3, 4)) == Fraction(3, 4)
    assert not is_symbolic(RatFunc.constant(2))
    assert is_symbolic(tau)


def test_evaluate_and_pole():
    f = (tau + 1) / (tau - Fraction(1, 2))
    assert f.evaluate(0) == -2
    assert evaluate(Fraction(5), Fraction(1, 2)) == 5
    with pytest.raises(PoleError):
        f.evaluate(Fraction(1, 2))


def test_pole_order():
    f = 1 / (tau**3 * (tau - 1))
    assert f.pole_order(0) == 3
    assert f.pole_order(1) == 1
    assert f.pole_order(2) == 0


def test_division_by_zero():
    with pytest.raises(ScalarDivisionError):
        tau / 0
    with pytest.raises(ZeroDivisionError):
        RatFunc.constant(0).inverse()
    with pytest.raises(ScalarDivisionError):
        divide(Fraction(1, 2), Fraction(0))
    assert divide(Fraction(1, 2), Fraction(3)) == Fraction(1, 6)


def test_parse_scalar():
    assert parse_scalar("3/7") == Fraction(3, 7)
    assert parse_scalar("tau/2") == tau / 2


def test_pickles_through_parse():
    f = (tau**2 + Fraction(1, 3)) / (tau - 5)
    assert pickle.loads(pickle.dumps(f)) == f


def test_poch_and_rising():
    q = Fraction(1, 2)
    assert poch_q(Fraction(1, 3), q, 0) == 1
    assert poch_q(Fraction(1, 3), q, 2) == (1 - Fraction(1, 3)) * (1 - Fraction(1, 6))
    assert rising(Fraction(3), 3) == 60
    with pytest.raises(ValueError):
        rising(Fraction(1), -1)


@pytest.mark.parametrize("m", range(7))
@pytest.mark.parametrize("n", range(7))
def test_poch_splits_at_any_length(m, n):
    u, q = ParamSampler(m * 7 + n).vector(2, signed=True)
    assert poch_q(u, q, m + n) == poch_q(u, q, m) * poch_q(q**m * u, q, n)
    assert poch_q(tau, q, m + n) == poch_q(tau, q, m) * poch_q(q**m * tau, q, n)


def _random_ratfunc(sampler: ParamSampler) -> RatFunc:
    a, b, c, d, e = sampler.vector(5, signed=True)
    return (a * tau**2 + b * tau + c) / (d * tau + e)


@pytest.mark.parametrize("seed", range(3))
def test_evaluation_is_a_field_homomorphism(seed):
    sampler = ParamSampler(seed)
    f, g = _random_ratfunc(sampler), _random_ratfunc(sampler)
    checked = 0
    while checked < 10:
        x = sampler.rational(signed=True)
        if f.pole_order(x) or g.pole_order(x) or g.evaluate(x) == 0:
            continue
        fx, gx = f.evaluate(x), g.evaluate(x)
        assert (f + g).evaluate(x) == fx + gx
        assert (f - g).evaluate(x) == fx - gx
        assert (f * g).evaluate(x) == fx * gx
        assert (f / g).evaluate(x) == fx / gx
        checked += 1
