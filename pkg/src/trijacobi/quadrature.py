"""Gauss-Jacobi rules on [0, 1] and collapsed-coordinate rules on the triangle."""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import PoleError
from .jacobi1d import jacobi1d_norm, jacobi1d_recurrence

__all__ = ["QuadratureRule", "gauss_jacobi_01", "triangle_rule"]


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes, positive weights and the polynomial degree integrated exactly.

    ``nodes`` has shape ``(m,)`` on an interval and ``(m, 2)`` on the triangle.
    """

    nodes: np.ndarray
    weights: np.ndarray
    exact_degree: int

    def integrate(self, values):
        """Weighted sum of ``values`` sampled at the nodes (last axis)."""
        return np.asarray(values) @ self.weights


def gauss_jacobi_01(npts, a, b):
    """``npts``-point Gauss rule for ``x^a (1-x)^b`` on [0, 1] (Golub-Welsch).

    The Jacobi matrix comes from the three-term recurrence of the [0, 1]
    Jacobi polynomials, rewritten for ``x J_n``.
    """
    if npts < 1:
        raise ValueError("npts must be positive")
    if a <= -1 or b <= -1:
        raise PoleError("Gauss-Jacobi weights need a > -1 and b > -1")
    a = float(a)
    b = float(b)
    diag = np.empty(npts)
    off = np.empty(npts - 1)
    prev_plus = None
    for n in range(npts):
        cp, c0, cm = jacobi1d_recurrence(n, a, b)
        # x J_n = -cp/2 J_{n+1} + (1-c0)/2 J_n - cm/2 J_{n-1}
        diag[n] = (1.0 - float(c0)) / 2.0
        if n > 0:
            off[n - 1] = np.sqrt(prev_plus * float(cm) / 4.0)
        prev_plus = float(cp)
    if npts == 1:
        nodes = diag.copy()
        vecs = np.ones((1, 1))
    else:
        nodes, vecs = eigh_tridiagonal(diag, off)
    mass = float(jacobi1d_norm(0, a, b))
    weights = mass * vecs[0, :] ** 2
    return QuadratureRule(nodes, weights, 2 * npts - 1)


def triangle_rule(npts, p):
    """Product rule for ``x^a y^b (1-x-y)^c`` on the triangle.

    Uses ``x = u``, ``y = (1-u) v`` so the measure becomes
    ``u^a (1-u)^(b+c+1) v^b (1-v)^c du dv``, integrated by Gauss-Jacobi in
    each variable.
    """
    a, b, c = (float(t) for t in p)
    ru = gauss_jacobi_01(npts, a, b + c + 1.0)
    rv = gauss_jacobi_01(npts, b, c)
    u, v = np.meshgrid(ru.nodes, rv.nodes, indexing="ij")
    x = u.ravel()
    y = ((1.0 - u) * v).ravel()
    weights = np.outer(ru.weights, rv.weights).ravel()
    return QuadratureRule(np.column_stack([x, y]), weights, 2 * npts - 1)
