"""Two-variable Jacobi polynomials on the triangle and their D3 families.

    J_{n,k}^{(a,b,c)}(x, y) = J_{n-k}^{(a, b+c+2k+1)}(x) (1-x)^k J_k^{(b,c)}(y/(1-x))

for ``0 <= k <= n``. They are orthogonal on ``{x, y >= 0, x + y <= 1}`` for
the weight ``x^a y^b (1-x-y)^c``.

The dihedral group of the triangle acts by permuting the three pairs
``(a, x)``, ``(b, y)``, ``(c, z)`` with ``z = 1 - x - y`` in tandem. A family
``g`` is the polynomial obtained from the standard one by that substitution.
"""

from enum import Enum
from math import sqrt
from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import DomainError
from .hyper import exact_div, gamma_ratio
from .jacobi1d import (
    jacobi1d_coeffs,
    jacobi1d_eval,
    jacobi1d_norm,
    jacobi1d_norm_gammas,
    jacobi1d_poly,
)
from .poly import BivarPoly

__all__ = [
    "TriParams",
    "D3",
    "d3_compose",
    "d3_table",
    "tri_eval",
    "tri_values",
    "tri_poly",
    "tri_weight",
    "tri_norm",
    "tri_norm_ratio",
    "tri_overlap",
    "tri_family_eval",
    "tri_family_values",
    "tri_family_poly",
    "family_params",
    "family_norm",
    "tri_indices",
]


class TriParams(NamedTuple):
    a: object
    b: object
    c: object


def _check_index(n, k):
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got (n, k) = ({n}, {k})")


def tri_indices(nmax):
    """All ``(n, k)`` with ``n <= nmax``, in the column order of the basis kernels."""
    return [(n, k) for n in range(nmax + 1) for k in range(n + 1)]


def tri_poly(n, k, p):
    """``J_{n,k}`` as a :class:`BivarPoly` of total degree ``n``."""
    _check_index(n, k)
    a, b, c = p
    px = jacobi1d_poly(n - k, a, b + c + 2 * k + 1)
    # (1-x)^k J_k(y/(1-x)) = sum_j c_j y^j (1-x)^(k-j)
    one_minus_x = 1 - BivarPoly.x()
    y = BivarPoly.y()
    hom = BivarPoly()
    for j, cj in enumerate(jacobi1d_coeffs(k, b, c)):
        hom = hom + (y**j) * (one_minus_x ** (k - j)) * cj
    return px * hom


def tri_eval(n, k, p, x, y):
    """Evaluate ``J_{n,k}`` at one point, exactly for rational input.

    The factored form is used away from ``x = 1``; on that vertex the
    expanded polynomial is evaluated instead.
    """
    _check_index(n, k)
    a, b, c = p
    if x == 1:
        return tri_poly(n, k, p)(x, y)
    t = exact_div(y, 1 - x)
    return (
        jacobi1d_eval(n - k, a, b + c + 2 * k + 1, x)
        * (1 - x) ** k
        * jacobi1d_eval(k, b, c, t)
    )


def tri_values(n, k, p, x, y):
    """Vectorized float evaluation of ``J_{n,k}`` over point arrays."""
    _check_index(n, k)
    return kernels.tri_values(n, k, *p, x, y)


def tri_weight(p, x, y):
    """``x^a y^b (1-x-y)^c``; raises :class:`DomainError` outside the closed triangle."""
    a, b, c = p
    z = 1 - x - y
    if x < 0 or y < 0 or z < 0:
        raise DomainError(f"({x}, {y}) lies outside the triangle")
    for base, expo in ((x, a), (y, b), (z, c)):
        if base == 0 and expo < 0:
            raise DomainError("the weight is singular on this edge")
    return x**a * y**b * z**c


def tri_norm(n, k, p):
    """``N_{n-k}^{(a, b+c+2k+1)} N_k^{(b,c)}``, the squared norm of ``J_{n,k}``."""
    _check_index(n, k)
    a, b, c = p
    return jacobi1d_norm(n - k, a, b + c + 2 * k + 1) * jacobi1d_norm(k, b, c)


def _tri_norm_gammas(n, k, p):
    a, b, c = p
    num1, den1, s1 = jacobi1d_norm_gammas(n - k, a, b + c + 2 * k + 1)
    num2, den2, s2 = jacobi1d_norm_gammas(k, b, c)
    return num1 + num2, den1 + den2, s1 * s2


def tri_norm_ratio(idx1, p1, idx2, p2):
    """``tri_norm(idx1, p1) / tri_norm(idx2, p2)``, exact when the Gamma functions pair up."""
    num1, den1, s1 = _tri_norm_gammas(*idx1, p1)
    num2, den2, s2 = _tri_norm_gammas(*idx2, p2)
    return gamma_ratio(num1 + den2, den1 + num2) * exact_div(s1, s2)


def tri_overlap(n, k, p, x, y):
    """Orthonormal function ``sqrt(weight / norm) J_{n,k}`` at an interior point."""
    if not (x > 0 and y > 0 and x + y < 1):
        raise DomainError("overlap functions are evaluated at interior points")
    w = float(tri_weight(p, x, y))
    return sqrt(w / float(tri_norm(n, k, p))) * float(tri_eval(n, k, p, x, y))


# ---------------------------------------------------------------------------
# D3 action


class D3(Enum):
    """Elements of the symmetry group of the triangle.

    ``perm[i]`` is the slot of ``(a, x), (b, y), (c, z)`` that moves into slot
    ``i``: the family ``g`` is ``J^{(p[perm])}(v[perm[0]], v[perm[1]])``.
    """

    E = ("e", (0, 1, 2))
    PI = ("pi", (2, 1, 0))
    SIGMA = ("sigma", (1, 0, 2))
    TAU = ("tau", (0, 2, 1))
    ROT2PI3 = ("rot2pi3", (1, 2, 0))
    ROT4PI3 = ("rot4pi3", (2, 0, 1))

    def __init__(self, label, perm):
        self.label = label
        self.perm = perm

    @classmethod
    def from_name(cls, name):
        aliases = {"rot1": "rot2pi3", "rot2": "rot4pi3", "r2": "rot2pi3", "r4": "rot4pi3"}
        name = aliases.get(name.lower(), name.lower())
        for g in cls:
            if g.label == name:
                return g
        raise ValueError(f"unknown group element {name!r}")

    def __str__(self):
        return self.label


def d3_compose(g, h):
    """The product ``g h``: apply ``h`` to a family, then ``g``."""
    perm = tuple(g.perm[h.perm[i]] for i in range(3))
    for r in D3:
        if r.perm == perm:
            return r
    raise AssertionError("composition left the group")


def d3_table():
    """Cayley table as a dict ``(g, h) -> g h``."""
    return {(g, h): d3_compose(g, h) for g in D3 for h in D3}


def family_params(g, p):
    """Parameter triple used by family ``g``."""
    return TriParams(*(p[i] for i in g.perm))


def family_norm(g, n, k, p):
    """Squared norm of the ``g`` family polynomial for the weight ``x^a y^b z^c``."""
    return tri_norm(n, k, family_params(g, p))


def _family_point(g, x, y):
    v = (x, y, 1 - x - y)
    return v[g.perm[0]], v[g.perm[1]]


def tri_family_eval(g, n, k, p, x, y):
    """Value of the ``g`` family at ``(x, y)`` by parameter and variable substitution."""
    u, v = _family_point(g, x, y)
    return tri_eval(n, k, family_params(g, p), u, v)


def tri_family_values(g, n, k, p, x, y):
    """Vectorized float version of :func:`tri_family_eval`."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    u, v = _family_point(g, x, y)
    return kernels.tri_values(n, k, *family_params(g, p), u, v)


def tri_family_poly(g, n, k, p):
    """Exact polynomial of the ``g`` family member ``(n, k)``."""
    x = BivarPoly.x()
    y = BivarPoly.y()
    u, v = _family_point(g, x, y)
    return tri_poly(n, k, family_params(g, p)).substitute(u, v)
