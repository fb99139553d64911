from fractions import Fraction

import pytest

import nsr
from nsr.nekrasov import (
    block_value,
    evaluate_factors,
    full_factors,
    nekrasov_additive,
    nekrasov_box,
    nekrasov_full,
)
from nsr.partition import EMPTY, Partition, enumerate_partitions

logger = nsr._logger.getLogger("nsr")

pytestmark = [pytest.mark.unit]

U, Q, KAPPA = Fraction(3, 5), Fraction(2, 7), Fraction(11, 13)


def small_partitions(max_size: int = 3):
    return [p for size in range(max_size + 1) for p in enumerate_partitions(size)]


def test_trivial_factors():
    assert nekrasov_box(EMPTY, EMPTY, U, Q, KAPPA) == 1
    assert nekrasov_box(Partition((1,)), EMPTY, U, Q, KAPPA) == 1 - U
    assert nekrasov_box(EMPTY, Partition((1,)), U, Q, KAPPA) == 1 - U / (Q * KAPPA)


def test_box_form_matches_pochhammer_form():
    for lam in small_partitions():
        for mu in small_partitions():
            box = nekrasov_box(lam, mu, U, Q, KAPPA)
            assert box == evaluate_factors(full_factors(lam, mu), U, Q, KAPPA)
            assert nekrasov_full(lam, mu, U, Q, KAPPA) == box


@pytest.mark.parametrize("n", [2, 3])
def test_blocks_multiply_to_the_full_factor(n):
    for lam in small_partitions():
        for mu in small_partitions():
            product = Fraction(1)
            for k in range(n):
                product *= block_value(k, lam, mu, U, Q, KAPPA, n)
            assert product == nekrasov_full(lam, mu, U, Q, KAPPA)


def test_block_index_is_cyclic():
    lam, mu = Partition((2, 1)), Partition((1,))
    assert block_value(-1, lam, mu, U, Q, KAPPA, 2) == block_value(1, lam, mu, U, Q, KAPPA, 2)


def test_additive_single_box():
    v, k = Fraction(1, 3), Fraction(5, 2)
    assert nekrasov_additive(0, Partition((1,)), EMPTY, v, k, 1) == v
