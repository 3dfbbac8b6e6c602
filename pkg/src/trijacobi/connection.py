"""Racah connection matrices between the e, pi and sigma families.

For a fixed total degree ``n`` write ``phi^g_l = J^g_{n,l} / sqrt(h^g_l)``
for the orthonormalized members of family ``g``. A connection matrix ``C``
from ``source`` to ``target`` satisfies

    phi^target_l = sum_m C[l, m] phi^source_m,

and its entries are orthonormal Racah functions times a sign:

    pi <- e:      C[l, m] = (-1)^n         S_m^{(b, c, -n-1, n+1+a+b)}(l)
    sigma <- e:   C[l, m] = (-1)^(n+l+m)   S_m^{(c, b, -n-1, n+1+a+c)}(l)
    sigma <- pi:  C[l, m] = (-1)^(n+m)     S_m^{(a, b, -n-1, n+1+a+c)}(l)

The signs were fixed by least-squares fits against direct polynomial
evaluation and are enforced by the reconstruction tests.
"""

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .hyper import exact_div
from .racah import RacahParams, racah_eval, racah_norm, racah_orthonormal_table, racah_weight
from .triangle import D3, TriParams, family_norm, tri_family_values, tri_norm_ratio

__all__ = [
    "ConnectionMatrix",
    "pi_racah_params",
    "sigma_racah_params",
    "sigma_pi_racah_params",
    "connection_pi",
    "connection_sigma",
    "connection_sigma_from_pi",
    "expand_pi_in_e",
    "expand_sigma_in_e",
    "expand_sigma_in_pi",
    "pi_coefficient_squares_exact",
    "racah_dual_gram_exact",
]


@dataclass(frozen=True)
class ConnectionMatrix:
    """Orthogonal ``(n+1) x (n+1)`` matrix with rows indexed by ``l`` and columns by ``m``."""

    n: int
    source: D3
    target: D3
    entries: np.ndarray

    def orthogonality_defect(self):
        """``max(|C C^T - I|, |C^T C - I|)``."""
        C = self.entries
        eye = np.eye(self.n + 1)
        return float(max(np.abs(C @ C.T - eye).max(), np.abs(C.T @ C - eye).max()))


def pi_racah_params(n, p):
    a, b, c = p
    return RacahParams(b, c, -n - 1, n + 1 + a + b, n)


def sigma_racah_params(n, p):
    a, b, c = p
    return RacahParams(c, b, -n - 1, n + 1 + a + c, n)


def sigma_pi_racah_params(n, p):
    a, b, c = p
    return RacahParams(a, b, -n - 1, n + 1 + a + c, n)


def _signs(n, row_power, col_power):
    idx = np.arange(n + 1)
    return (-1.0) ** (n + row_power * idx[:, None] + col_power * idx[None, :])


def connection_pi(n, p):
    """Matrix taking the orthonormal e family to the orthonormal pi family."""
    T = racah_orthonormal_table(pi_racah_params(n, p))
    return ConnectionMatrix(n, D3.E, D3.PI, _signs(n, 0, 0) * T)


def connection_sigma(n, p):
    """Matrix taking the orthonormal e family to the orthonormal sigma family."""
    T = racah_orthonormal_table(sigma_racah_params(n, p))
    return ConnectionMatrix(n, D3.E, D3.SIGMA, _signs(n, 1, 1) * T)


def connection_sigma_from_pi(n, p):
    """Matrix taking the orthonormal pi family to the orthonormal sigma family."""
    T = racah_orthonormal_table(sigma_pi_racah_params(n, p))
    return ConnectionMatrix(n, D3.PI, D3.SIGMA, _signs(n, 0, 1) * T)


def _sqrt_norms(g, n, p):
    return np.array([sqrt(float(family_norm(g, n, m, p))) for m in range(n + 1)])


def _expand(cm, ell, p, x, y):
    n = cm.n
    src_norms = _sqrt_norms(cm.source, n, p)
    total = 0.0
    for m in range(n + 1):
        vals = tri_family_values(cm.source, n, m, p, x, y)
        total = total + cm.entries[ell, m] / src_norms[m] * vals
    return sqrt(float(family_norm(cm.target, n, ell, p))) * total


def expand_pi_in_e(n, ell, p, x, y):
    """``J^{(c,b,a)}_{n,l}(1-x-y, y)`` rebuilt from the e family.

    Uses the closed form ``F(l) sum_m (-1)^n R_m / G_m J^{(a,b,c)}_{n,m}(x, y)``
    with ``F = sqrt(w(l) h^pi_l)`` and ``G_m = sqrt(M_m h^e_m)``.
    """
    rp = pi_racah_params(n, p).as_fraction()
    F = sqrt(float(racah_weight(ell, rp)) * float(family_norm(D3.PI, n, ell, p)))
    total = 0.0
    for m in range(n + 1):
        G = sqrt(float(racah_norm(m, rp)) * float(family_norm(D3.E, n, m, p)))
        R = float(racah_eval(m, ell, rp))
        total = total + (-1) ** n * R / G * tri_family_values(D3.E, n, m, p, x, y)
    return F * total


def expand_sigma_in_e(n, ell, p, x, y):
    """``J^{(b,a,c)}_{n,l}(y, x)`` rebuilt from the e family."""
    return _expand(connection_sigma(n, p), ell, p, x, y)


def expand_sigma_in_pi(n, ell, p, x, y):
    """``J^{(b,a,c)}_{n,l}(y, x)`` rebuilt from the pi family."""
    return _expand(connection_sigma_from_pi(n, p), ell, p, x, y)


def pi_coefficient_squares_exact(n, p):
    """Exact squares of the pi-from-e expansion coefficients.

    Returns ``Q`` with ``Q[l][m] = (F(l) R_m / G_m)**2`` computed with rational
    arithmetic; the norm quotients ``h^pi_l / h^e_m`` reduce to Pochhammer
    products. Needs rational ``p``.
    """
    rp = pi_racah_params(n, TriParams(*p))
    pi_p = TriParams(p[2], p[1], p[0])
    Q = []
    for ell in range(n + 1):
        row = []
        w = racah_weight(ell, rp)
        for m in range(n + 1):
            ratio = tri_norm_ratio((n, ell), pi_p, (n, m), p)
            R = racah_eval(m, ell, rp)
            row.append(exact_div(w * R * R, racah_norm(m, rp)) * ratio)
        Q.append(row)
    return Q


def racah_dual_gram_exact(rp):
    """Exact check that the orthonormal Racah matrix is orthogonal in both directions.

    Returns ``(rows_ok, cols_ok)`` from
    ``sum_l w(l) R_m R_m' = M_m delta`` and ``sum_m R_m(l) R_m(l') / M_m = delta / w(l)``.
    """
    N = rp.N
    R = [[racah_eval(m, ell, rp) for ell in range(N + 1)] for m in range(N + 1)]
    w = [racah_weight(ell, rp) for ell in range(N + 1)]
    M = [racah_norm(m, rp) for m in range(N + 1)]
    rows_ok = all(
        sum(w[l] * R[m][l] * R[mm][l] for l in range(N + 1)) == (M[m] if m == mm else 0)
        for m in range(N + 1)
        for mm in range(N + 1)
    )
    cols_ok = all(
        sum(exact_div(R[m][l] * R[m][ll], M[m]) for m in range(N + 1))
        == (exact_div(1, w[l]) if l == ll else 0)
        for l in range(N + 1)
        for ll in range(N + 1)
    )
    return rows_ok, cols_ok
