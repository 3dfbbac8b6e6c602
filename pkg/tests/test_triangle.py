from fractions import Fraction as F
import itertools
import math

import numpy as np
import pytest
from scipy.special import eval_jacobi

from conftest import CAYLEY, CAYLEY_ORDER as ORDER, FIXED_RATIONAL, FLOAT_PARAMS
from trijacobi.errors import DomainError
from trijacobi.jacobi1d import jacobi1d_eval, jacobi1d_norm
from trijacobi.quadrature import triangle_rule
from trijacobi.triangle import (
    D3,
    d3_compose,
    d3_table,
    family_norm,
    family_params,
    tri_eval,
    tri_family_eval,
    tri_family_poly,
    tri_family_values,
    tri_indices,
    tri_norm,
    tri_norm_ratio,
    tri_overlap,
    tri_poly,
    tri_values,
    tri_weight,
)

P = FIXED_RATIONAL


def _scipy_tri(n, k, p, x, y):
    a, b, c = p
    t = y / (1 - x)
    return (
        eval_jacobi(n - k, a, b + c + 2 * k + 1, 1 - 2 * x)
        * (1 - x) ** k
        * eval_jacobi(k, b, c, 1 - 2 * t)
    )


def test_eval_examples():
    a, b, c = P
    x, y = F(1, 5), F(2, 9)
    assert tri_eval(0, 0, P, x, y) == 1
    assert tri_eval(1, 0, P, x, y) == (a + 1) - (a + b + c + 3) * x
    assert tri_eval(1, 1, P, x, y) == (b + 1) * (1 - x) - (b + c + 2) * y


def test_index_validation():
    with pytest.raises(ValueError):
        tri_eval(1, 2, P, F(1, 3), F(1, 3))
    assert tri_indices(2) == [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)]


def test_vertex_x_equals_one():
    # the factored form divides by 1 - x; the polynomial path must take over
    for n in range(5):
        for k in range(n + 1):
            assert tri_eval(n, k, P, 1, 0) == tri_poly(n, k, P)(1, 0)
    vals = tri_values(3, 2, (1, 2, 3), np.array([1.0]), np.array([0.0]))
    assert vals[0] == pytest.approx(float(tri_eval(3, 2, (1, 2, 3), 1, 0)))


def test_poly_degree_and_eval_agree():
    rng = np.random.default_rng(3)
    pts = [(F(int(i), 17), F(int(j), 19)) for i, j in rng.integers(0, 8, size=(20, 2))]
    for n in range(9):
        for k in range(n + 1):
            poly = tri_poly(n, k, P)
            assert poly.total_degree() == n
            # the top block x^(n-k) y^k is present
            assert poly.coeff(n - k, k) != 0
            if n <= 4:
                for x, y in pts:
                    assert poly(x, y) == tri_eval(n, k, P, x, y)


def test_float_eval_matches_scipy(interior_points):
    x, y = interior_points
    for p in FLOAT_PARAMS:
        for n in range(7):
            for k in range(n + 1):
                np.testing.assert_allclose(tri_values(n, k, p, x, y), _scipy_tri(n, k, p, x, y), rtol=1e-10)
                assert tri_eval(n, k, p, x[0], y[0]) == pytest.approx(_scipy_tri(n, k, p, x[0], y[0]), rel=1e-10)


def test_weight():
    assert tri_weight((0, 0, 0), 0.2, 0.3) == 1
    assert tri_weight((1, 1, 1), F(1, 4), F(1, 4)) == F(1, 32)
    assert tri_weight((1, 0, 0), 0, F(1, 2)) == 0
    with pytest.raises(DomainError):
        tri_weight((0, 0, 0), 0.8, 0.5)
    with pytest.raises(DomainError):
        tri_weight((-0.5, 0, 0), 0, 0.5)


def test_norm_examples():
    assert tri_norm(0, 0, (0, 0, 0)) == F(1, 2)
    assert tri_norm(1, 1, (0, 0, 0)) == F(1, 12)
    a, b, c = 0.5, 0.3, 1.7
    assert tri_norm(3, 1, (a, b, c)) == pytest.approx(
        jacobi1d_norm(2, a, b + c + 3) * jacobi1d_norm(1, b, c)
    )


def test_norm_ratio_exact():
    p = (F(1, 3), F(2, 7), F(1, 5))
    q = (F(1, 5), F(2, 7), F(1, 3))
    r = tri_norm_ratio((3, 1), p, (3, 2), q)
    assert isinstance(r, F)
    assert float(r) == pytest.approx(float(tri_norm(3, 1, p)) / float(tri_norm(3, 2, q)), rel=1e-13)


def test_overlap():
    assert tri_overlap(0, 0, (0, 0, 0), 0.2, 0.3) == pytest.approx(math.sqrt(2))
    with pytest.raises(DomainError):
        tri_overlap(0, 0, (0, 0, 0), 0.0, 0.3)


@pytest.mark.parametrize("p", FLOAT_PARAMS)
def test_overlaps_orthonormal_in_lebesgue_measure(p):
    # a product of two overlaps is w J J / h, so the weighted rule is exact once w is divided out
    rule = triangle_rule(8, p)
    labels = tri_indices(4)
    V = np.array(
        [[tri_overlap(n, k, p, x, y) for x, y in rule.nodes] for n, k in labels]
    )
    w = np.array([float(tri_weight(p, x, y)) for x, y in rule.nodes])
    G = (V * rule.weights / w) @ V.T
    np.testing.assert_allclose(G, np.eye(len(labels)), atol=1e-11)


# ---------------------------------------------------------------------------
# D3




def test_cayley_table():
    table = d3_table()
    for g in ORDER:
        for h, gh in zip(ORDER, CAYLEY[g]):
            assert table[(D3.from_name(g), D3.from_name(h))] is D3.from_name(gh)


def test_compose_examples_and_aliases():
    assert d3_compose(D3.PI, D3.PI) is D3.E
    assert d3_compose(D3.PI, D3.SIGMA) is D3.ROT2PI3
    assert d3_compose(D3.ROT2PI3, D3.ROT4PI3) is D3.E
    assert D3.from_name("rot1") is D3.ROT2PI3 and D3.from_name("rot2") is D3.ROT4PI3
    with pytest.raises(ValueError):
        D3.from_name("nope")


@pytest.mark.parametrize(
    "g,h", [(D3.TAU, D3.E), (D3.ROT2PI3, D3.SIGMA), (D3.ROT4PI3, D3.PI)]
)
def test_phase_identities(g, h):
    for n in range(7):
        for k in range(n + 1):
            assert tri_family_poly(g, n, k, P) == tri_family_poly(h, n, k, P) * ((-1) ** k)


def test_family_definitions():
    a, b, c = P
    x, y = F(1, 7), F(2, 5)
    z = 1 - x - y
    assert tri_family_eval(D3.PI, 3, 1, P, x, y) == tri_eval(3, 1, (c, b, a), z, y)
    assert tri_family_eval(D3.SIGMA, 3, 1, P, x, y) == tri_eval(3, 1, (b, a, c), y, x)
    assert family_params(D3.PI, P) == (c, b, a)


def test_group_action_is_consistent():
    # family(g h) at (p, v) = family h at (p o g, v o g)
    x, y = F(1, 7), F(2, 5)
    v = (x, y, 1 - x - y)
    for g, h in itertools.product(D3, D3):
        gh = d3_compose(g, h)
        pg = family_params(g, P)
        vg = tuple(v[i] for i in g.perm)
        for n in range(5):
            for k in range(n + 1):
                assert tri_family_eval(gh, n, k, P, x, y) == tri_family_eval(h, n, k, pg, vg[0], vg[1])


def test_family_values_match_exact(interior_points):
    x, y = interior_points
    p = (0.5, 0.3, 1.7)
    for g in D3:
        vals = tri_family_values(g, 4, 2, p, x, y)
        exact = [float(tri_family_eval(g, 4, 2, p, F(u), F(w))) for u, w in zip(x, y)]
        np.testing.assert_allclose(vals, exact, rtol=1e-12)


@pytest.mark.parametrize("p", FLOAT_PARAMS)
@pytest.mark.parametrize("g", [D3.E, D3.PI, D3.SIGMA])
def test_family_orthogonality(p, g):
    rule = triangle_rule(12, p)
    x, y = rule.nodes[:, 0], rule.nodes[:, 1]
    labels = tri_indices(6)
    V = np.stack([tri_family_values(g, n, k, p, x, y) for n, k in labels])
    G = (V * rule.weights) @ V.T
    h = np.array([float(family_norm(g, n, k, p)) for n, k in labels])
    assert np.abs(np.diag(G) / h - 1).max() <= 1e-10
    off = G / np.sqrt(np.outer(h, h)) - np.eye(len(labels))
    assert np.abs(off).max() <= 1e-10
