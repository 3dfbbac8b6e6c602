"""Scalar kernels: rising factorials, Gamma ratios and terminating hypergeometric sums.

Every routine works in two number systems. Python ``int`` and
:class:`fractions.Fraction` inputs are handled with exact field arithmetic;
anything else (``float``, numpy scalars or arrays) falls through to ordinary
floating point.
"""

from fractions import Fraction
import math

from .errors import (
    DegenerateDenominator,
    DegenerateLowerParameter,
    IrreducibleRatio,
    PoleError,
)

__all__ = [
    "is_exact",
    "exact_div",
    "product_ratio",
    "pochhammer",
    "hyp_terminating",
    "gamma_ratio",
]


def is_exact(*values):
    """True when every value is an ``int`` or a ``Fraction``."""
    return all(isinstance(v, (int, Fraction)) for v in values)


def exact_div(num, den):
    """Divide, keeping ``int / int`` inside the rationals."""
    if isinstance(num, int) and isinstance(den, int):
        return Fraction(num, den)
    return num / den


def product_ratio(num_factors, den_factors, what="coefficient"):
    """``prod(num_factors) / prod(den_factors)``.

    Returns 0 without inspecting the denominator when a numerator factor is
    zero; otherwise a zero denominator factor raises
    :class:`DegenerateDenominator` naming ``what``.
    """
    num = 1
    for f in num_factors:
        num = num * f
    if num == 0:
        return 0
    den = 1
    for f in den_factors:
        if f == 0:
            raise DegenerateDenominator(f"{what}: denominator vanishes")
        den = den * f
    return exact_div(num, den)


def pochhammer(x, n):
    """Rising factorial ``(x)_n = x (x+1) ... (x+n-1)``, with ``(x)_0 = 1``."""
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    result = 1
    for j in range(n):
        result = result * (x + j)
    return result


def hyp_terminating(upper, lower, arg, terms):
    r"""Sum the first ``terms`` terms of a generalized hypergeometric series.

    Computes

    .. math:: \sum_{j=0}^{terms-1} \frac{\prod_i (u_i)_j}{\prod_i (l_i)_j}
              \frac{arg^j}{j!}

    using forward term ratios. The loop stops as soon as an upper parameter
    produces a zero factor, so a ``-n`` upper parameter terminates the sum
    naturally even if ``terms`` is larger than ``n + 1``.

    ``arg`` may be a numpy array, in which case the sum is evaluated
    elementwise.
    """
    total = 1
    term = 1
    for j in range(terms - 1):
        num = 1
        for u in upper:
            num = num * (u + j)
        if num == 0:
            break
        den = j + 1
        for low in lower:
            factor = low + j
            if factor == 0:
                raise DegenerateLowerParameter(
                    f"lower parameter {low} reaches zero at index {j}"
                )
            den = den * factor
        term = term * exact_div(num, den) * arg
        total = total + term
    return total


def _gamma_sign(x):
    if x > 0:
        return 1
    return -1 if math.floor(-x) % 2 == 0 else 1


def _check_pole(x):
    if x <= 0 and x == math.floor(x):
        raise PoleError(f"Gamma has a pole at {x}")


def _gamma_ratio_float(num, den):
    log_value = 0.0
    sign = 1
    for x in num:
        x = float(x)
        _check_pole(x)
        log_value += math.lgamma(x)
        sign *= _gamma_sign(x)
    for x in den:
        x = float(x)
        _check_pole(x)
        log_value -= math.lgamma(x)
        sign *= _gamma_sign(x)
    return sign * math.exp(log_value)


def _gamma_shift(top, bottom):
    """Gamma(top)/Gamma(bottom) for arguments differing by an integer."""
    shift = int(top - bottom)
    if shift >= 0:
        return Fraction(pochhammer(bottom, shift))
    return 1 / Fraction(pochhammer(top, -shift))


def _gamma_ratio_exact(num, den):
    num = [Fraction(v) for v in num]
    den = [Fraction(v) for v in den]
    for x in num + den:
        _check_pole(x)
    result = Fraction(1)
    pending = list(den)
    leftover_num = []
    for x in num:
        for i, d in enumerate(pending):
            if (x - d).denominator == 1:
                result *= _gamma_shift(x, d)
                del pending[i]
                break
        else:
            leftover_num.append(x)
    for x in leftover_num + pending:
        if x.denominator != 1:
            raise IrreducibleRatio(
                f"Gamma({x}) cannot be paired with an integer-shifted argument"
            )
    for x in leftover_num:
        result *= math.factorial(int(x) - 1)
    for x in pending:
        result /= math.factorial(int(x) - 1)
    return result


def gamma_ratio(num, den):
    """Return ``prod Gamma(num) / prod Gamma(den)``.

    With exact inputs the ratio is reduced to Pochhammer products and returned
    as a ``Fraction``; arguments that cannot be paired by integer shifts raise
    :class:`IrreducibleRatio` unless they are themselves positive integers.
    Otherwise the value is computed from log-Gamma with the sign tracked
    separately, so negative non-integer arguments are fine.
    """
    num = list(num)
    den = list(den)
    if is_exact(*num, *den):
        return _gamma_ratio_exact(num, den)
    return _gamma_ratio_float(num, den)
