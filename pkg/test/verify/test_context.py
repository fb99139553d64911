from fractions import Fraction

import pytest

import nsr
from nsr.states import CheckSpec
from nsr.verify import CheckContext
from nsr.verify.context import MAX_WITNESSES

from ..utils import series

logger = nsr._logger.getLogger("nsr")

pytestmark = [pytest.mark.unit]


@pytest.fixture
def ctx():
    return CheckContext(CheckSpec(name="kappa0", n=2, trials=2), order=3, sigma_order=2, batch=3)


def test_trials_include_the_batch(ctx):
    assert ctx.trials == 6


def test_compare_reports_the_lowest_key(ctx):
    a = series(2, 3, {(0, 0): 1, (1, 0): 2, (0, 2): 5})
    b = series(2, 3, {(0, 0): 1, (1, 0): 2, (0, 2): 4, (2, 1): 1})
    assert ctx.compare(a, a)
    assert not ctx.failed
    assert not ctx.compare(a, b, "lhs-rhs")
    witness = ctx.witnesses[0]
    assert witness.key == "lhs-rhs:(0,2)"
    assert (witness.lhs, witness.rhs) == ("5", "4")


def test_equal_formats_scalars(ctx):
    assert not ctx.equal(Fraction(1, 3), Fraction(1, 2), (1,), "P^k")
    assert ctx.witnesses[0].key == "P^k:(1)"
    assert ctx.witnesses[0].lhs == "1/3"


def test_witness_list_is_bounded(ctx):
    for k in range(3 * MAX_WITNESSES):
        ctx.witness((k,), 1, 0)
    assert len(ctx.witnesses) == MAX_WITNESSES


def test_points_are_recorded(ctx):
    point = ctx.point()
    assert ctx.points == [point]
    assert ctx.weight() is None
