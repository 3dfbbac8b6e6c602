"""Racah polynomials on a finite lattice: values, weights, norms and bispectrality.

``R_m(lambda(l)) = 4F3(-m, m+alpha+beta+1, -l, l+gamma+delta+1;
alpha+1, beta+delta+1, gamma+1; 1)`` with ``lambda(l) = l(l+gamma+delta+1)``
and one of ``alpha+1``, ``beta+delta+1``, ``gamma+1`` equal to ``-N``.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import copysign, factorial, sqrt
import warnings

import numpy as np

from .errors import NegativeRatio
from .hyper import exact_div, hyp_terminating, pochhammer, product_ratio

__all__ = [
    "TruncationCase",
    "RacahParams",
    "racah_lambda",
    "racah_eval",
    "racah_weight",
    "racah_K",
    "racah_norm",
    "racah_orthonormal",
    "racah_orthonormal_table",
    "racah_recurrence",
    "racah_difference",
    "racah_structure_constants",
    "racah_realization",
]


class TruncationCase(Enum):
    ALPHA = "alpha"
    BETA_DELTA = "beta+delta"
    GAMMA = "gamma"


@dataclass(frozen=True)
class RacahParams:
    """Parameters ``(alpha, beta, gamma, delta)`` and lattice size ``N``.

    The truncation case is detected from the parameters; exactly one of the
    three conditions must hold.
    """

    alpha: object
    beta: object
    gamma: object
    delta: object
    N: int
    case: TruncationCase = field(init=False)

    def __post_init__(self):
        if self.N < 0:
            raise ValueError("N must be nonnegative")
        hits = []
        if self.alpha + 1 == -self.N:
            hits.append(TruncationCase.ALPHA)
        if self.beta + self.delta + 1 == -self.N:
            hits.append(TruncationCase.BETA_DELTA)
        if self.gamma + 1 == -self.N:
            hits.append(TruncationCase.GAMMA)
        if len(hits) != 1:
            raise ValueError(
                "exactly one of alpha+1, beta+delta+1, gamma+1 must equal -N "
                f"(matched {[h.value for h in hits]})"
            )
        object.__setattr__(self, "case", hits[0])

    def dual(self):
        """Parameters with ``alpha <-> gamma`` and ``beta <-> delta`` exchanged."""
        return RacahParams(self.gamma, self.delta, self.alpha, self.beta, self.N)

    def as_fraction(self):
        """Same parameters as ``Fraction`` values (floats at their exact binary value)."""
        return RacahParams(
            *(Fraction(v) for v in (self.alpha, self.beta, self.gamma, self.delta)), self.N
        )

    def as_float(self):
        return RacahParams(
            float(self.alpha), float(self.beta), float(self.gamma), float(self.delta), self.N
        )


def racah_lambda(ell, rp):
    return ell * (ell + rp.gamma + rp.delta + 1)


def racah_eval(m, ell, rp):
    """``R_m(lambda(ell))``; the sum stops after ``min(m, ell) + 1`` terms."""
    al, be, ga, de = rp.alpha, rp.beta, rp.gamma, rp.delta
    return hyp_terminating(
        [-m, m + al + be + 1, -ell, ell + ga + de + 1],
        [al + 1, be + de + 1, ga + 1],
        1,
        min(m, ell) + 1,
    )


def racah_weight(ell, rp):
    """Orthogonality weight ``w(ell)``."""
    al, be, ga, de = rp.alpha, rp.beta, rp.gamma, rp.delta
    return product_ratio(
        [
            pochhammer(al + 1, ell),
            pochhammer(be + de + 1, ell),
            pochhammer(ga + 1, ell),
            pochhammer(ga + de + 2, 2 * ell),
        ],
        [
            pochhammer(-al + ga + de + 1, ell),
            pochhammer(-be + ga + 1, ell),
            pochhammer(ga + de + ell + 1, ell),
            pochhammer(de + 1, ell),
            factorial(ell),
        ],
        f"racah weight at l={ell}",
    )


def racah_K(rp):
    """The case-dependent constant ``K`` entering the norms."""
    al, be, ga, de, N = rp.alpha, rp.beta, rp.gamma, rp.delta, rp.N
    if rp.case is TruncationCase.ALPHA:
        num = [pochhammer(-be, N), pochhammer(ga + de + 2, N)]
        den = [pochhammer(-be + ga + 1, N), pochhammer(de + 1, N)]
    elif rp.case is TruncationCase.BETA_DELTA:
        num = [pochhammer(-al + de, N), pochhammer(ga + de + 2, N)]
        den = [pochhammer(-al + ga + de + 1, N), pochhammer(de + 1, N)]
    else:
        num = [pochhammer(al + be + 2, N), pochhammer(-de, N)]
        den = [pochhammer(al - de + 1, N), pochhammer(be + 1, N)]
    return product_ratio(num, den, "racah K")


def racah_norm(m, rp):
    """Squared norm ``M_m = sum_l w(l) R_m(lambda(l))**2``."""
    al, be, ga, de = rp.alpha, rp.beta, rp.gamma, rp.delta
    return racah_K(rp) * product_ratio(
        [
            pochhammer(m + al + be + 1, m),
            pochhammer(al + be - ga + 1, m),
            pochhammer(al - de + 1, m),
            pochhammer(be + 1, m),
            factorial(m),
        ],
        [
            pochhammer(al + be + 2, 2 * m),
            pochhammer(al + 1, m),
            pochhammer(be + de + 1, m),
            pochhammer(ga + 1, m),
        ],
        f"racah norm at m={m}",
    )


def _signed_sqrt(value, where):
    value = float(value)
    if value < 0:
        warnings.warn(f"negative ratio w/M at {where}", NegativeRatio, stacklevel=3)
    return copysign(sqrt(abs(value)), value)


def racah_orthonormal(m, ell, rp):
    """``S_m(ell) = sqrt(w(ell)/M_m) R_m(lambda(ell))`` as a float.

    The ratio and the polynomial value are computed exactly (float parameters
    are taken at their binary value), so only the final root is rounded. A
    negative ``w/M`` triggers a :class:`NegativeRatio` warning and the sign
    is moved outside the square root.
    """
    qp = rp.as_fraction()
    ratio = exact_div(racah_weight(ell, qp), racah_norm(m, qp))
    return _signed_sqrt(ratio, f"m={m}, l={ell}") * float(racah_eval(m, ell, qp))


def racah_orthonormal_table(rp, method="exact"):
    """Array ``T`` with ``T[ell, m] = S_m(ell)`` for ``0 <= ell, m <= N``.

    ``method="exact"`` converts the parameters to ``Fraction`` (floats are
    taken at their exact binary value) and rounds only at the final square
    root, which keeps the matrix orthogonal to machine precision. The
    ``"float"`` method uses the compiled kernel and loses a few digits to
    cancellation in the hypergeometric sums once ``N`` approaches 10.
    Results are cached; the returned array is read-only.
    """
    return _orthonormal_table_cached(rp, method)


@lru_cache(maxsize=256)
def _orthonormal_table_cached(rp, method):
    T = _orthonormal_table(rp, method)
    T.setflags(write=False)
    return T


def _orthonormal_table(rp, method):
    N = rp.N
    if method == "exact":
        qp = rp.as_fraction()
        T = np.empty((N + 1, N + 1))
        negative = False
        for m in range(N + 1):
            M = racah_norm(m, qp)
            for ell in range(N + 1):
                ratio = exact_div(racah_weight(ell, qp), M)
                negative = negative or ratio < 0
                T[ell, m] = copysign(sqrt(abs(ratio)), float(ratio)) * float(racah_eval(m, ell, qp))
        if negative:
            warnings.warn("negative ratio w/M in racah table", NegativeRatio, stacklevel=2)
        return T
    if method != "float":
        raise ValueError(f"unknown method {method!r}")
    from .kernels import racah_table

    fp = rp.as_float()
    w = np.array([float(racah_weight(l, fp)) for l in range(N + 1)])
    M = np.array([float(racah_norm(m, fp)) for m in range(N + 1)])
    ratio = w[:, None] / M[None, :]
    if np.any(ratio < 0):
        warnings.warn("negative ratio w/M in racah table", NegativeRatio, stacklevel=2)
    scale = np.sign(ratio) * np.sqrt(np.abs(ratio))
    R = racah_table(fp.alpha, fp.beta, fp.gamma, fp.delta, N)
    return scale * R.T


def racah_recurrence(m, rp):
    """``(A_m, C_m)`` of ``lambda R_m = A_m R_{m+1} - (A_m+C_m) R_m + C_m R_{m-1}``.

    ``C_m`` has the denominator ``(2m+alpha+beta)(2m+alpha+beta+1)``. With
    ``+2`` in place of ``+1`` in the second factor the recurrence fails.
    """
    al, be, ga, de = rp.alpha, rp.beta, rp.gamma, rp.delta
    A = product_ratio(
        [m + al + 1, m + al + be + 1, m + ga + 1, m + be + de + 1],
        [2 * m + al + be + 1, 2 * m + al + be + 2],
        f"A_{m}",
    )
    if m == 0:
        C = 0
    else:
        C = product_ratio(
            [m, m + be, m + al - de, m + al + be - ga],
            [2 * m + al + be, 2 * m + al + be + 1],
            f"C_{m}",
        )
    return A, C


def racah_difference(ell, rp):
    """``(B(ell), D(ell))`` of the difference equation in ``ell``."""
    al, be, ga, de = rp.alpha, rp.beta, rp.gamma, rp.delta
    B = product_ratio(
        [ell + al + 1, ell + be + de + 1, ell + ga + 1, ell + ga + de + 1],
        [2 * ell + ga + de + 1, 2 * ell + ga + de + 2],
        f"B({ell})",
    )
    if ell == 0:
        D = 0
    else:
        D = product_ratio(
            [ell, ell - al + ga + de, ell - be + ga, ell + de],
            [2 * ell + ga + de, 2 * ell + ga + de + 1],
            f"D({ell})",
        )
    return B, D


def racah_structure_constants(rp):
    """``xi, eta1, eta2, zeta1, zeta2`` of the Racah algebra realized on the lattice."""
    al, be, ga, de = rp.alpha, rp.beta, rp.gamma, rp.delta
    return {
        "xi": be * (de - ga - 2) - al * (2 * be + ga + de + 2) - 2 * (ga + 1) * (de + 1),
        "eta1": -(al + be) * (2 + al + be),
        "eta2": -(ga + de) * (2 + ga + de),
        "zeta1": (al + 1) * (al + be) * (be + de + 1) * (ga + 1),
        "zeta2": (al + 1) * (be + de + 1) * (ga + 1) * (ga + de),
    }


def racah_realization(rp):
    """Lattice operators ``K1 = -B T+ - D T- + (B+D)`` and ``K2 = -lambda(l)``.

    Both act on functions of ``l`` in ``{0, ..., N}``; ``T+`` at ``l = N`` and
    ``T-`` at ``l = 0`` carry vanishing coefficients and are dropped.
    """
    from .lattice import LatticeOp

    labels = list(range(rp.N + 1))
    k1 = {}
    k2 = {}
    for ell in labels:
        B, D = racah_difference(ell, rp)
        row = {ell: B + D}
        if ell + 1 <= rp.N:
            row[ell + 1] = -B
        if ell >= 1:
            row[ell - 1] = -D
        k1[ell] = row
        k2[ell] = {ell: -racah_lambda(ell, rp)}
    return LatticeOp(labels, k1), LatticeOp(labels, k2)
