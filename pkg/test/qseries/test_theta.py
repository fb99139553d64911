from fractions import Fraction

import pytest
import sympy

import nsr
from nsr.exceptions import DegreeConstraintError
from nsr.qseries import (
    CoordSystem,
    Monomial,
    TruncSeries,
    euler_product,
    infinite_poch_expand,
    literal_poch_expand,
    theta_at_one,
    theta_expand,
    theta_product,
    v0_coefficients,
    v_potential,
)

logger = nsr._logger.getLogger("nsr")

pytestmark = [pytest.mark.unit]


def test_euler_pentagonal_numbers():
    euler = euler_product(CoordSystem.nome(), 7)
    assert euler.nome_coefficients() == [1, -1, -1, 0, 0, 1, 0, 1]


def test_poch_and_its_reciprocal():
    coords = CoordSystem.cyclic(2)
    w = Monomial(Fraction(2, 3), (1, 0))
    q = Fraction(1, 5)
    a = infinite_poch_expand(w, q, coords, 6)
    b = infinite_poch_expand(w, q, coords, 6, inverse=True)
    assert a * b == TruncSeries.one(coords, 6)


@pytest.mark.parametrize("factors", range(5))
@pytest.mark.parametrize("inverse", [False, True])
def test_poch_splits_off_its_literal_partial_product(factors, inverse):
    coords = CoordSystem.cyclic(3)
    w = Monomial(Fraction(-3, 2), (1, 1, 0))
    q = Fraction(2, 7)
    head = literal_poch_expand(w, q, coords, 8, factors)
    tail = infinite_poch_expand(w.scale(q**factors), q, coords, 8, inverse)
    full = infinite_poch_expand(w, q, coords, 8, inverse)
    if inverse:
        assert full * head == tail
    else:
        assert full == head * tail


def test_literal_partial_product_expands_the_factors():
    coords = CoordSystem.cyclic(2)
    w = Monomial(Fraction(1, 2), (1, 0))
    q = Fraction(1, 3)
    expected = TruncSeries(
        coords, 4, {(0, 0): 1, (1, 0): -Fraction(1, 2) * (1 + q), (2, 0): Fraction(1, 4) * q}
    )
    assert literal_poch_expand(w, q, coords, 4, 2) == expected


@pytest.mark.parametrize("n, order", [(2, 6), (3, 5)])
def test_jacobi_sum_matches_triple_product(n, order):
    coords = CoordSystem.cyclic(n)
    for j in range(2, n + 1):
        w = Monomial(Fraction(3, 7), coords.arc(1, j))
        assert theta_expand(w, coords, order) == theta_product(w, coords, order)


def test_theta_argument_must_be_an_arc():
    coords = CoordSystem.cyclic(2)
    with pytest.raises(DegreeConstraintError):
        theta_expand(Monomial.of(coords.full()), coords, 4)
    with pytest.raises(DegreeConstraintError):
        theta_expand(Monomial.of((2, 0)), coords, 4)


def test_theta_derivatives_at_one():
    nome = CoordSystem.nome()
    cube = -(euler_product(nome, 8) ** 3)
    assert theta_at_one(1, nome, 8) == cube
    assert theta_at_one(2, nome, 8) == cube
    with pytest.raises(ValueError):
        theta_at_one(0, nome, 8)


def test_v_potential_is_reflection_invariant():
    coords = CoordSystem.cyclic(3)
    c = Fraction(5, 3)
    w = Monomial(c, coords.arc(1, 2))
    reflected = Monomial(1 / c, coords.coarc(1, 2))
    assert v_potential(w, coords, 5) == v_potential(reflected, coords, 5)


@pytest.mark.parametrize("shift", [1, 2, -1])
def test_v_potential_is_elliptic(shift):
    coords = CoordSystem.cyclic(3)
    w = Monomial(Fraction(-4, 3), coords.arc(1, 3))
    assert v_potential(w, coords, 6, shift=shift) == v_potential(w, coords, 6)


def test_shifted_theta_log_derivative_drops_by_one():
    coords = CoordSystem.cyclic(2)
    w = Monomial(Fraction(3, 5), coords.arc(1, 2))
    shifted = theta_expand(w, coords, 6, 1, shift=1) / theta_expand(w, coords, 6, shift=1)
    plain = theta_expand(w, coords, 6, 1) / theta_expand(w, coords, 6)
    assert shifted == plain - 1


def test_v0_is_minus_twice_the_divisor_sums():
    expected = [-2 * int(sympy.divisor_sigma(k)) for k in range(1, 8)]
    assert v0_coefficients(7) == expected
    assert expected == [-2, -6, -8, -14, -12, -24, -16]
