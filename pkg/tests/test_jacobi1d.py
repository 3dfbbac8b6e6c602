from fractions import Fraction as F
import math
import random

import numpy as np
import pytest
from scipy.special import eval_jacobi
import sympy as sp

from trijacobi.errors import DegenerateDenominator, PoleError
from trijacobi.jacobi1d import (
    jacobi1d_coeffs,
    jacobi1d_diffop,
    jacobi1d_eval,
    jacobi1d_norm,
    jacobi1d_norm_ratio,
    jacobi1d_poly,
    jacobi1d_recurrence,
    jacobi1d_reflect_check,
    jacobi1d_reflect_poly_check,
)
from trijacobi.poly import BivarPoly
from trijacobi.quadrature import gauss_jacobi_01

_r = random.Random(99)
PAIRS = [(F(_r.randint(-6, 40), 7), F(_r.randint(-10, 50), 11)) for _ in range(5)]


def test_eval_examples():
    a, b, x = F(2, 3), F(1, 5), F(3, 7)
    assert jacobi1d_eval(0, a, b, x) == 1
    assert jacobi1d_eval(1, a, b, x) == (a + 1) - (a + b + 2) * x
    assert jacobi1d_eval(3, a, b, 0) == (a + 1) * (a + 2) * (a + 3) / 6


@pytest.mark.parametrize("n", range(9))
def test_eval_matches_scipy(n):
    xs = np.linspace(0, 1, 7)
    for a, b in [(0.0, 0.0), (0.5, 1.5), (2.3, -0.4)]:
        got = np.array([jacobi1d_eval(n, a, b, float(x)) for x in xs])
        np.testing.assert_allclose(got, eval_jacobi(n, a, b, 1 - 2 * xs), rtol=1e-12, atol=1e-12)


def test_leading_coefficient():
    for a, b in PAIRS:
        for n in range(9):
            lead = jacobi1d_coeffs(n, a, b)[-1]
            expected = (-1) ** n * F(math.prod(n + a + b + 1 + j for j in range(n))) / math.factorial(n)
            assert lead == expected


def test_norm_examples():
    assert jacobi1d_norm(0, 0, 0) == 1
    for n in range(6):
        assert jacobi1d_norm(n, 0, 0) == F(1, 2 * n + 1)
    assert jacobi1d_norm(2, 1, 2) == F(3, 40)


def test_norm_against_sympy_integral():
    t = sp.symbols("t")
    for n, a, b in [(2, 1, 2), (3, 0, 4), (1, 2, 0)]:
        J = sp.Poly(list(reversed(jacobi1d_coeffs(n, a, b))), t).as_expr()
        val = sp.integrate(J**2 * t**a * (1 - t) ** b, (t, 0, 1))
        assert sp.Rational(val) == sp.Rational(jacobi1d_norm(n, a, b).numerator, jacobi1d_norm(n, a, b).denominator)


def test_norm_pole():
    with pytest.raises(PoleError):
        jacobi1d_norm(1, -1, 0.5)


def test_norm_ratio():
    a, b = F(1, 3), F(2, 5)
    assert jacobi1d_norm_ratio(3, 3, a, b) == 1
    assert jacobi1d_norm_ratio(1, 0, 0, 0) == F(1, 3)
    fa, fb = 0.7, 1.9
    ratio = float(jacobi1d_norm_ratio(2, 1, F(7, 10), F(19, 10)))
    assert ratio == pytest.approx(jacobi1d_norm(2, fa, fb) / jacobi1d_norm(1, fa, fb), rel=1e-13)


@pytest.mark.parametrize("a,b", PAIRS)
def test_eigen_identity(a, b):
    H = jacobi1d_diffop(a, b)
    for n in range(9):
        J = jacobi1d_poly(n, a, b)
        assert H(J) == J * (-n * (n + a + b + 1))


def test_diffop_on_monomial():
    assert jacobi1d_diffop(0, 0)(BivarPoly.x()) == 1 - 2 * BivarPoly.x()


@pytest.mark.parametrize("a,b", PAIRS)
def test_recurrence_identity(a, b):
    x = BivarPoly.x()
    for n in range(9):
        cp, c0, cm = jacobi1d_recurrence(n, a, b)
        lhs = (1 - 2 * x) * jacobi1d_poly(n, a, b)
        rhs = jacobi1d_poly(n + 1, a, b) * cp + jacobi1d_poly(n, a, b) * c0
        if n > 0:
            rhs = rhs + jacobi1d_poly(n - 1, a, b) * cm
        assert lhs == rhs


def test_recurrence_examples():
    assert jacobi1d_recurrence(1, 0, 0).c_zero == 0
    assert jacobi1d_recurrence(1, 1, 0).c_zero == F(-1, 15)


def test_recurrence_removable_at_zero():
    # a + b = -1 makes the general n = 0 formulas 0/0
    cp, c0, cm = jacobi1d_recurrence(0, F(-1, 2), F(-1, 2))
    assert (cp, c0, cm) == (2, 0, 0)


def test_recurrence_degenerate():
    with pytest.raises(DegenerateDenominator):
        jacobi1d_recurrence(1, -1, -1)


def test_reflection():
    assert jacobi1d_reflect_check(0, F(1, 2), 3, F(1, 7))
    assert jacobi1d_reflect_check(5, F(1, 3), F(2, 7), F(3, 4))
    assert jacobi1d_reflect_check(4, 0.3, 1.1, 0.41)
    for n in range(9):
        assert jacobi1d_reflect_poly_check(n, F(2, 9), F(5, 3))


@pytest.mark.parametrize("a", [0, 0.5, 1, 2.3])
@pytest.mark.parametrize("b", [0, 0.5, 1, 2.3])
def test_orthogonality_by_quadrature(a, b):
    rule = gauss_jacobi_01(12, a, b)
    V = np.array([[float(jacobi1d_eval(n, a, b, x)) for x in rule.nodes] for n in range(9)])
    G = (V * rule.weights) @ V.T
    norms = np.array([float(jacobi1d_norm(n, a, b)) for n in range(9)])
    np.testing.assert_allclose(G / np.sqrt(np.outer(norms, norms)), np.eye(9), atol=1e-10)
