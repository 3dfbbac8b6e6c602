from fractions import Fraction as F

from hypothesis import given, settings, strategies as st
import pytest

from trijacobi.poly import BivarPoly, PolyDiffOp, anticommutator, commutator

coef = st.fractions(min_value=-5, max_value=5, max_denominator=7)
polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), coef, max_size=5
).map(BivarPoly)
ops = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), polys, max_size=3).map(
    PolyDiffOp
)

x = BivarPoly.x()
y = BivarPoly.y()


def test_basic_ring():
    p = (1 + x) * (1 - x)
    assert p == 1 - x * x
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert BivarPoly().total_degree() == -1
    assert p.total_degree() == 2
    assert p(F(1, 2), 0) == F(3, 4)


def test_no_stored_zeros():
    p = x - x
    assert p.is_zero() and len(p) == 0


def test_substitute_and_diff():
    p = x * x * y
    assert p.substitute(1 - x - y, y) == (1 - x - y) ** 2 * y
    assert p.diff(1, 0) == 2 * x * y
    assert p.diff(2, 1) == BivarPoly.constant(2)


def test_leibniz_commutator():
    dx = PolyDiffOp.partial(1, 0)
    X = PolyDiffOp.multiplication(x)
    assert commutator(dx, X) == PolyDiffOp.identity()


def test_operator_application_matches_composition():
    A = PolyDiffOp({(1, 0): x * y, (0, 2): 1 - x})
    B = PolyDiffOp({(0, 1): x + 2, (0, 0): y})
    p = x**3 * y**2 + 3 * y - 1
    assert (A * B)(p) == A(B(p))


@settings(max_examples=40, deadline=None)
@given(ops, ops, ops)
def test_normal_form_is_canonical(A, B, C):
    assert (A - A).is_zero()
    assert ((A + B) * C - A * C - B * C).is_zero()


@settings(max_examples=30, deadline=None)
@given(ops, ops, ops)
def test_commutator_jacobi_identity(A, B, C):
    res = commutator(commutator(A, B), C) + commutator(commutator(B, C), A) + commutator(commutator(C, A), B)
    assert res.is_zero()


@settings(max_examples=30, deadline=None)
@given(ops, ops, polys)
def test_anticommutator_applies(A, B, p):
    assert anticommutator(A, B)(p) == A(B(p)) + B(A(p))


def test_scalar_conversions():
    op = PolyDiffOp.multiplication(x) - 1
    assert op(BivarPoly.constant(1)) == x - 1
    with pytest.raises(TypeError):
        PolyDiffOp.identity() + "a"
