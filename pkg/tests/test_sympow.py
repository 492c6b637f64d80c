import pytest

from conftest import a5_std, klein_std, sub_2f1, sym
from lode_atlas.diffop import operator_delta_n
from lode_atlas.sympow import sym_basis, symmetric_power


def test_first_power_is_identity():
    L = klein_std()
    assert symmetric_power(L, 1) == L


def test_square_of_trivial_operator():
    assert symmetric_power(operator_delta_n(2), 2) == operator_delta_n(3)


def test_basis_count():
    assert len(sym_basis(3, 4)) == 15
    assert len(sym_basis(3, 9)) == 55
    assert len(sym_basis(2, 5)) == 6


def test_a5_is_symmetric_square_of_second_order():
    assert symmetric_power(sub_2f1(), 2) == a5_std()


def test_full_order_for_low_powers():
    # no relation below the curve degree: orders are the full binomial
    # counts for the quartic-curve group at d = 2, 3
    assert sym("klein", 2).order == 6
    assert sym("klein", 3).order == 10


def test_curve_relations_reduce_order():
    # one degree-4 relation: 15 -> 14; its degree-6 multiples: 28 -> 22
    assert sym("klein", 4).order == 14
    assert sym("klein", 6).order == 22
    # the degree-2 relation of the icosahedral equation: 6 -> 5
    assert sym("a5", 2).order == 5


@pytest.mark.slow
def test_unit_invariant_constant_coefficients():
    assert sym("klein", 6).coeffs[0].is_zero()
    assert sym("a5", 6).coeffs[0].is_zero()
