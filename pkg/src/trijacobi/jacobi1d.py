"""Univariate Jacobi polynomials on [0, 1].

The normalization is

    J_n^{(a,b)}(x) = (a+1)_n / n! * 2F1(-n, n+a+b+1; a+1; x),

orthogonal for the weight ``x**a * (1-x)**b``. In terms of the classical
polynomials on [-1, 1] this is ``P_n^{(a,b)}(1 - 2x)``.
"""

from math import factorial, isclose
from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import DegenerateDenominator, IrreducibleRatio, PoleError
from .hyper import exact_div, gamma_ratio, hyp_terminating, is_exact, pochhammer
from .poly import BivarPoly, PolyDiffOp

__all__ = [
    "RecurrenceCoeffs",
    "jacobi1d_eval",
    "jacobi1d_coeffs",
    "jacobi1d_poly",
    "jacobi1d_norm",
    "jacobi1d_norm_ratio",
    "jacobi1d_norm_gammas",
    "jacobi1d_diffop",
    "jacobi1d_recurrence",
    "jacobi1d_reflect_check",
    "jacobi1d_reflect_poly_check",
]


class RecurrenceCoeffs(NamedTuple):
    """Coefficients of ``(1-2x) J_n = c_plus J_{n+1} + c_zero J_n + c_minus J_{n-1}``."""

    c_plus: object
    c_zero: object
    c_minus: object


def jacobi1d_eval(n, a, b, x):
    """Evaluate ``J_n^{(a,b)}(x)``; exact for rational input, vectorized over arrays.

    Rational input sums the hypergeometric series exactly. Float input goes
    through the three-term recurrence kernel, which keeps full relative
    accuracy near the zeros where the alternating series cancels; the series
    is the fallback when the recurrence hits a zero denominator.
    """
    if is_exact(a, b, x):
        return _eval_series(n, a, b, x)
    with np.errstate(divide="ignore", invalid="ignore"):
        vals = kernels.jacobi_values(n, a, b, np.ravel(x))
    if not np.all(np.isfinite(vals)):
        return _eval_series(n, float(a), float(b), x)
    return float(vals[0]) if np.ndim(x) == 0 else vals.reshape(np.shape(x))


def _eval_series(n, a, b, x):
    lead = exact_div(pochhammer(a + 1, n), factorial(n))
    return lead * hyp_terminating([-n, n + a + b + 1], [a + 1], x, n + 1)


def jacobi1d_coeffs(n, a, b):
    """Ascending power-basis coefficients of ``J_n^{(a,b)}``."""
    coeff = exact_div(pochhammer(a + 1, n), factorial(n))
    coeffs = [coeff]
    for j in range(n):
        coeff = coeff * exact_div((j - n) * (n + a + b + 1 + j), (a + 1 + j) * (j + 1))
        coeffs.append(coeff)
    return coeffs


def jacobi1d_poly(n, a, b, var="x"):
    """``J_n^{(a,b)}`` as a :class:`BivarPoly` in ``var``."""
    return BivarPoly.from_univariate(jacobi1d_coeffs(n, a, b), var)


def jacobi1d_norm_gammas(n, a, b):
    """Split ``N_n`` as ``scale * prod Gamma(num) / prod Gamma(den)``; returns ``(num, den, scale)``."""
    # N_n = Gamma(n+a+1) Gamma(n+b+1) / (n! Gamma(n+a+b+2)) * (n+a+b+1)/(2n+a+b+1)
    # The trailing factor is 1 at n = 0, which keeps a+b+1 = 0 harmless.
    num = [n + a + 1, n + b + 1]
    den = [n + 1, n + a + b + 2]
    if n == 0:
        scale = 1
    else:
        scale = exact_div(n + a + b + 1, 2 * n + a + b + 1)
    return num, den, scale


def jacobi1d_norm(n, a, b):
    """Squared norm ``N_n^{(a,b)} = int_0^1 J_n^2 x^a (1-x)^b dx``.

    Rational parameters give an exact ``Fraction`` when every Gamma function
    reduces to factorials; otherwise the value is a float.
    """
    if a <= -1 or b <= -1:
        raise PoleError("the norm needs a > -1 and b > -1")
    num, den, scale = jacobi1d_norm_gammas(n, a, b)
    if is_exact(a, b):
        try:
            return gamma_ratio(num, den) * scale
        except IrreducibleRatio:
            pass
    num = [float(v) for v in num]
    den = [float(v) for v in den]
    return gamma_ratio(num, den) * float(scale)


def jacobi1d_norm_ratio(n, m, a, b):
    """``N_n / N_m``, exact for rational parameters."""
    num_n, den_n, scale_n = jacobi1d_norm_gammas(n, a, b)
    num_m, den_m, scale_m = jacobi1d_norm_gammas(m, a, b)
    return gamma_ratio(num_n + den_m, den_n + num_m) * exact_div(scale_n, scale_m)


def jacobi1d_diffop(a, b):
    """``x(1-x) d^2/dx^2 + (a+1-(a+b+2)x) d/dx``; eigenvalue ``-n(n+a+b+1)`` on ``J_n``."""
    x = BivarPoly.x()
    return PolyDiffOp(
        {
            (2, 0): x - x * x,
            (1, 0): (a + 1) - x * (a + b + 2),
        }
    )


def jacobi1d_recurrence(n, a, b):
    """Three-term recurrence coefficients for ``(1-2x) J_n``.

    The general formulas have removable 0/0 forms at ``n = 0`` when
    ``a + b`` is 0 or -1, so that case uses the simplified closed form.
    """
    if n == 0:
        return RecurrenceCoeffs(
            exact_div(2, a + b + 2), exact_div(b - a, a + b + 2), 0
        )
    s = a + b
    d0, d1, d2 = 2 * n + s, 2 * n + s + 1, 2 * n + s + 2
    if d0 == 0 or d1 == 0 or d2 == 0:
        raise DegenerateDenominator(f"recurrence denominator vanishes at n={n}")
    c_plus = exact_div(2 * (n + 1) * (n + s + 1), d1 * d2)
    c_zero = exact_div(-(a - b) * s, d0 * d2)
    c_minus = exact_div(2 * (n + a) * (n + b), d0 * d1)
    return RecurrenceCoeffs(c_plus, c_zero, c_minus)


def jacobi1d_reflect_check(n, a, b, x, rel_tol=1e-12):
    """Check ``J_n^{(a,b)}(1-x) = (-1)^n J_n^{(b,a)}(x)`` at one point.

    Exact equality for rational input, relative tolerance otherwise.
    """
    lhs = jacobi1d_eval(n, a, b, 1 - x)
    rhs = (-1) ** n * jacobi1d_eval(n, b, a, x)
    if is_exact(a, b, x):
        return lhs == rhs
    scale = max(abs(lhs), abs(rhs), 1.0)
    return isclose(lhs, rhs, rel_tol=rel_tol, abs_tol=rel_tol * scale)


def jacobi1d_reflect_poly_check(n, a, b):
    """Coefficient-level version of :func:`jacobi1d_reflect_check`."""
    lhs = jacobi1d_poly(n, a, b).substitute(1 - BivarPoly.x(), BivarPoly.y())
    rhs = jacobi1d_poly(n, b, a) * ((-1) ** n)
    return lhs == rhs
