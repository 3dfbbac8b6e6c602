from fractions import Fraction as F
import math

import numpy as np
import pytest
from scipy import integrate
from scipy.special import beta as beta_fn

from trijacobi.errors import PoleError
from trijacobi.jacobi1d import jacobi1d_norm
from trijacobi.quadrature import gauss_jacobi_01, triangle_rule
from trijacobi.triangle import tri_indices, tri_norm, tri_values


def test_midpoint():
    rule = gauss_jacobi_01(1, 0, 0)
    assert rule.nodes[0] == pytest.approx(0.5)
    assert rule.weights[0] == pytest.approx(1.0)


@pytest.mark.parametrize("a,b", [(0, 0), (0.5, 1.5), (-0.5, 2.0), (3.0, -0.7)])
def test_mass_and_positivity(a, b):
    rule = gauss_jacobi_01(8, a, b)
    assert rule.weights.sum() == pytest.approx(beta_fn(a + 1, b + 1), rel=1e-13)
    assert float(jacobi1d_norm(0, a, b)) == pytest.approx(beta_fn(a + 1, b + 1), rel=1e-13)
    assert np.all(rule.weights > 0)
    assert np.all((rule.nodes > 0) & (rule.nodes < 1))


@pytest.mark.parametrize("npts", [1, 2, 5, 10, 20])
@pytest.mark.parametrize("a,b", [(0, 0), (0.5, 1.5), (2.0, 0.3)])
def test_monomial_exactness(npts, a, b):
    rule = gauss_jacobi_01(npts, a, b)
    for d in range(2 * npts):
        exact = beta_fn(a + d + 1, b + 1)
        assert rule.integrate(rule.nodes**d) == pytest.approx(exact, rel=1e-12)


def test_pole_error():
    with pytest.raises(PoleError):
        gauss_jacobi_01(3, -1, 0)
    with pytest.raises(ValueError):
        gauss_jacobi_01(0, 0, 0)


def test_triangle_basics():
    rule = triangle_rule(6, (0, 0, 0))
    assert rule.weights.sum() == pytest.approx(0.5)
    x, y = rule.nodes[:, 0], rule.nodes[:, 1]
    assert rule.integrate(x) == pytest.approx(1 / 6)
    assert np.all(x > 0) and np.all(y > 0) and np.all(x + y < 1)
    for i in range(9):
        for j in range(9 - i):
            exact = math.factorial(i) * math.factorial(j) / math.factorial(i + j + 2)
            assert rule.integrate(x**i * y**j) == pytest.approx(exact, rel=1e-12)


def test_triangle_against_scipy_dblquad():
    p = (0.5, 0.3, 1.7)
    rule = triangle_rule(8, p)
    x, y = rule.nodes[:, 0], rule.nodes[:, 1]
    f = lambda yy, xx: xx**2 * yy * xx**p[0] * yy**p[1] * (1 - xx - yy) ** p[2]
    ref, _ = integrate.dblquad(f, 0, 1, 0, lambda xx: 1 - xx, epsabs=1e-13, epsrel=1e-12)
    assert rule.integrate(x**2 * y) == pytest.approx(ref, rel=1e-8)


def test_plateau_when_npts_grows():
    p = (1.0, 2.0, 3.0)
    labels = tri_indices(4)

    def gram(npts):
        rule = triangle_rule(npts, p)
        x, y = rule.nodes[:, 0], rule.nodes[:, 1]
        V = np.stack([tri_values(n, k, p, x, y) for n, k in labels])
        h = np.array([float(tri_norm(n, k, p)) for n, k in labels])
        return (V * rule.weights) @ V.T / np.sqrt(np.outer(h, h))

    assert np.abs(gram(6) - gram(8)).max() < 1e-12
