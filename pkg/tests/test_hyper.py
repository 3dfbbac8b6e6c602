from fractions import Fraction as F
import math

from hypothesis import given, strategies as st
import pytest

from trijacobi.errors import DegenerateLowerParameter, IrreducibleRatio, PoleError
from trijacobi.hyper import exact_div, gamma_ratio, hyp_terminating, pochhammer, product_ratio

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=13)


def test_pochhammer_examples():
    assert pochhammer(3, 0) == 1
    assert pochhammer(1, 4) == 24
    assert pochhammer(F(1, 2), 2) == F(3, 4)


@given(rationals, st.integers(0, 20), st.integers(0, 20))
def test_pochhammer_splits(x, m, n):
    assert pochhammer(x, m + n) == pochhammer(x, m) * pochhammer(x + m, n)


def test_pochhammer_negative_length():
    with pytest.raises(ValueError):
        pochhammer(1, -1)


def test_hyp_examples():
    assert hyp_terminating([0, 5], [3], 0.7, 1) == 1
    b, c, x = F(2, 3), F(5, 7), F(1, 9)
    assert hyp_terminating([-1, b], [c], x, 2) == 1 - b / c * x
    assert hyp_terminating([-2, 4], [2], 1, 3) == F(1, 3)


@given(rationals, rationals, rationals, st.integers(1, 8))
def test_hyp_zero_upper_is_one(u, low, x, terms):
    if low <= 0 and low.denominator == 1:
        return
    assert hyp_terminating([0, u], [low], x, terms) == 1


def test_hyp_matches_termwise_sum():
    up, low, x = [-4, F(7, 3)], [F(2, 5)], F(3, 4)
    direct = sum(
        F(pochhammer(up[0], j) * pochhammer(up[1], j)) / (pochhammer(low[0], j) * math.factorial(j)) * x**j
        for j in range(5)
    )
    assert hyp_terminating(up, low, x, 5) == direct


def test_hyp_degenerate_lower():
    with pytest.raises(DegenerateLowerParameter):
        hyp_terminating([-3, 1], [-1], F(1, 2), 4)


def test_gamma_ratio_examples():
    assert gamma_ratio([5], [3]) == 12
    a = F(2, 7)
    assert gamma_ratio([a + 3], [a + 1]) == (a + 1) * (a + 2)
    assert gamma_ratio([2.5], [1.5]) == pytest.approx(1.5, rel=1e-14)


def test_gamma_ratio_negative_arguments_sign():
    # Gamma(-0.5) / Gamma(0.5) = -2
    assert gamma_ratio([-0.5], [0.5]) == pytest.approx(-2.0, rel=1e-14)


def test_gamma_ratio_modes_agree():
    for a in (F(1, 3), F(5, 2), F(-2, 7)):
        exact = gamma_ratio([a + 4, 2 * a + 3], [a + 1, 2 * a + 1])
        approx = gamma_ratio([float(a + 4), float(2 * a + 3)], [float(a + 1), float(2 * a + 1)])
        assert float(exact) == pytest.approx(approx, rel=1e-13)


def test_gamma_ratio_errors():
    with pytest.raises(PoleError):
        gamma_ratio([-2.0], [1.0])
    with pytest.raises(IrreducibleRatio):
        gamma_ratio([F(1, 3)], [F(1, 2)])


def test_product_ratio_zero_numerator_short_circuits():
    assert product_ratio([0, 5], [0]) == 0
    assert exact_div(1, 3) == F(1, 3)
