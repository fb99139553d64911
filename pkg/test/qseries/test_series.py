from fractions import Fraction

import pytest

import nsr
from nsr.exceptions import CoordinateMismatchError, ScalarDivisionError, SeriesInversionError
from nsr.qseries import CoordSystem, Monomial, TruncSeries, first_difference
from nsr.scalar import RatFunc
from nsr.verify import ParamSampler

from ..utils import series, unit

logger = nsr._logger.getLogger("nsr")

pytestmark = [pytest.mark.unit]

C2 = CoordSystem.cyclic(2)


def test_terms_beyond_the_order_are_dropped():
    s = series(2, 2, {(0, 0): 1, (1, 1): 3, (2, 1): 5})
    assert len(s) == 2
    assert s[(2, 1)] == 0


def test_key_arity_is_checked():
    with pytest.raises(CoordinateMismatchError):
        series(2, 2, {(0, 0, 0): 1})
    with pytest.raises(CoordinateMismatchError):
        series(2, 2, {(0, 0): 1}) + TruncSeries.one(CoordSystem.cyclic(3), 2)


def test_geometric_inverse():
    y1 = TruncSeries.monomial(C2, 5, Monomial.of(unit(2, 1)))
    inv = (1 - y1).invert()
    assert inv == series(2, 5, {(k, 0): 1 for k in range(6)})
    assert (1 - y1) * inv == TruncSeries.one(C2, 5)


def test_zero_constant_term_cannot_be_inverted():
    with pytest.raises(SeriesInversionError):
        series(2, 3, {(1, 0): 1}).invert()


def test_rational_power():
    s = series(2, 4, {(0, 0): 1, (1, 0): 1, (0, 1): Fraction(2, 3)})
    root = s.pow_rational(Fraction(1, 2))
    assert root * root == s
    assert s.pow_rational(Fraction(-1)) == s.invert()


def test_product_truncates_at_the_smaller_order():
    a = series(2, 3, {(0, 0): 1, (1, 0): 1})
    b = series(2, 1, {(0, 0): 1, (0, 1): 1})
    assert (a * b).trunc == 1


def test_p_derivative_and_rotation():
    s = series(3, 3, {(0, 0, 0): 1, (1, 0, 0): 2, (1, 1, 1): 5})
    assert s.p_derivative() == series(3, 3, {(1, 0, 0): 2, (1, 1, 1): 15})
    assert s.rotate()[(0, 0, 1)] == 2
    assert s.rotate(3) == s


def test_evaluate_symbolic_coefficients():
    tau = RatFunc.generator()
    s = series(2, 2, {(0, 0): 1 + tau, (1, 0): tau / (tau - 1)})
    assert s.evaluate(Fraction(0)) == series(2, 2, {(0, 0): 1})


def test_nome_views():
    s = series(2, 4, {(0, 0): 1, (1, 1): -1, (2, 2): 3})
    nome = s.to_nome()
    assert nome.coords.kind == "nome"
    assert nome.nome_coefficients() == [1, -1, 3]
    assert nome.lift(C2) == s


def test_first_difference_is_the_lowest_key():
    a = series(2, 3, {(0, 0): 1, (0, 1): 2, (2, 0): 7})
    b = series(2, 3, {(0, 0): 1, (0, 1): 2, (1, 0): 4, (2, 0): 6})
    assert first_difference(a, a) is None
    assert first_difference(a, b) == ((1, 0), 0, 4)


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("seed", range(3))
def test_ring_axioms_on_random_series(n, seed):
    coords = CoordSystem.cyclic(n)
    sampler = ParamSampler(seed)
    a, b, c = (sampler.series(coords, 4) for _ in range(3))
    zero, one = TruncSeries.zero(coords, 4), TruncSeries.one(coords, 4)

    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a + zero == a
    assert a - a == zero
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * one == a
    assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("lower", [0, 1, 2, 3])
def test_truncation_is_a_ring_homomorphism(lower):
    sampler = ParamSampler(lower)
    a, b = sampler.series(C2, 5), sampler.series(C2, 5)
    assert (a + b).truncate(lower) == a.truncate(lower) + b.truncate(lower)
    assert (a * b).truncate(lower) == a.truncate(lower) * b.truncate(lower)
    assert TruncSeries.one(C2, 5).truncate(lower) == TruncSeries.one(C2, lower)


def test_division_by_a_zero_scalar():
    with pytest.raises(ScalarDivisionError):
        TruncSeries.one(C2, 2) / 0
