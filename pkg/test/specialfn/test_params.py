from fractions import Fraction

import pytest

import nsr
from nsr.exceptions import MissingRootError, ScalarDivisionError
from nsr.partition import DominantWeight, Partition
from nsr.specialfn import ParamPoint

logger = nsr._logger.getLogger("nsr")

pytestmark = [pytest.mark.unit]


def test_vectors_must_match_n():
    with pytest.raises(ValueError):
        ParamPoint(n=2, s=(Fraction(1, 2),))
    with pytest.raises(ValueError):
        ParamPoint(n=1)


def test_root_must_reproduce_q():
    with pytest.raises(MissingRootError):
        ParamPoint(n=2, q=Fraction(1, 3), r=Fraction(1, 2), root=2)
    point = ParamPoint(n=2, q=Fraction(1, 4), r=Fraction(1, 2), root=2)
    assert point.root_power(-1) == 2
    with pytest.raises(MissingRootError):
        ParamPoint(n=2).root_power(1)


def test_twisted_spectral_values():
    q, t = Fraction(1, 3), Fraction(2, 5)
    point = ParamPoint.twisted(2, q, t, (Fraction(3, 7), Fraction(5, 2)))
    assert point.s == (t * Fraction(3, 7), Fraction(5, 2))
    assert point.eigenvalue_sum() == t * Fraction(3, 7) + Fraction(5, 2)


def test_dominant_point():
    r, t = Fraction(1, 2), Fraction(3, 5)
    point = ParamPoint.dominant(DominantWeight(2, 1, Partition((1,))), r, t)
    assert point.q == Fraction(1, 4)
    assert point.kappa == 2 / t
    # s_i = r^{-K(N-i) + N mu_i}
    assert point.s == (r ** (-1 + 2), 1)


def test_from_mapping_and_record():
    point = ParamPoint.from_mapping(2, {"q": "1/3", "s": "1/2,2/5", "beta": "3/2"})
    assert point.q == Fraction(1, 3)
    assert point.s == (Fraction(1, 2), Fraction(2, 5))
    record = point.as_record()
    assert record["s"] == "1/2,2/5"
    assert record["beta"] == "3/2"
    assert "k" not in record
    with pytest.raises(ValueError):
        ParamPoint.from_mapping(2, {"z": "1"})


def test_dominant_point_at_zero_t():
    with pytest.raises(ScalarDivisionError):
        ParamPoint.dominant(DominantWeight(2, 1), Fraction(1, 2), Fraction(0))


def test_toda_spectral_point():
    s = (Fraction(5, 7), Fraction(3, 11))
    point = ParamPoint.toda_spectral(2, Fraction(2, 3), s)
    assert point.q == Fraction(4, 9)
    assert point.qlam == point.s == s
    assert not point.lam
