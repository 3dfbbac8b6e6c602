"""Floating-point evaluation kernels.

Each kernel exists twice: a loop version compiled with ``numba.njit`` and a
vectorized numpy version. The compiled one is used when numba imports and the
environment variable ``TRIJACOBI_DISABLE_NUMBA`` is unset (or ``0``). Both are
exposed under explicit names so they can be compared directly, which is what
``benchmarks/bench_kernels.py`` does.

All kernels take plain float parameters and float64 point arrays.
"""

import os

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None

__all__ = [
    "BACKEND",
    "jacobi_values",
    "tri_values",
    "tri_basis",
    "racah_table",
    "numba_kernels",
    "numpy_kernels",
]

_DISABLED = os.environ.get("TRIJACOBI_DISABLE_NUMBA", "").strip() not in ("", "0")


# ---------------------------------------------------------------------------
# loop kernels (numba targets)
#
# Values come from the homogenized three-term recurrence. With
# H_j = u^j J_j^{(a,b)}(t/u), multiplying
#     (1 - 2s) J_j(s) = c+_j J_{j+1}(s) + c0_j J_j(s) + c-_j J_{j-1}(s)
# through by u^(j+1) at s = t/u gives
#     c+_j H_{j+1} = ((1 - c0_j) u - 2t) H_j - c-_j u^2 H_{j-1},
# which is stable and stays finite at u = 0. The plain polynomial is u = 1.
# The recurrence denominators are nonzero whenever a, b > -1.


def _rec_coeffs(j, a, b):
    s = a + b
    if j == 0:
        return 2.0 / (s + 2.0), (b - a) / (s + 2.0), 0.0
    cp = 2.0 * (j + 1.0) * (j + s + 1.0) / ((2.0 * j + s + 1.0) * (2.0 * j + s + 2.0))
    c0 = -(a - b) * s / ((2.0 * j + s) * (2.0 * j + s + 2.0))
    cm = 2.0 * (j + a) * (j + b) / ((2.0 * j + s) * (2.0 * j + s + 1.0))
    return cp, c0, cm


def _rec_table(n, a, b):
    # rows j = 0..n-1 hold (1/c+, 1 - c0, c-) so the inner loops only multiply
    tab = np.empty((max(n, 1), 3))
    for j in range(n):
        cp, c0, cm = _rec_coeffs_loop(j, a, b)
        tab[j, 0] = 1.0 / cp
        tab[j, 1] = 1.0 - c0
        tab[j, 2] = cm
    return tab


_rec_coeffs_loop = _rec_coeffs


def _hom_jacobi_loop(n, tab, t, u):
    h_prev = 0.0
    h = 1.0
    for j in range(n):
        h_next = ((tab[j, 1] * u - 2.0 * t) * h - tab[j, 2] * u * u * h_prev) * tab[j, 0]
        h_prev = h
        h = h_next
    return h


def _jacobi_values_loop(n, a, b, x):
    tab = _rec_table(n, a, b)
    out = np.empty(x.shape[0])
    for i in range(x.shape[0]):
        out[i] = _hom_jacobi_loop(n, tab, x[i], 1.0)
    return out


def _tri_values_loop(n, k, a, b, c, x, y):
    tab_x = _rec_table(n - k, a, b + c + 2.0 * k + 1.0)
    tab_y = _rec_table(k, b, c)
    out = np.empty(x.shape[0])
    for i in range(x.shape[0]):
        px = _hom_jacobi_loop(n - k, tab_x, x[i], 1.0)
        out[i] = px * _hom_jacobi_loop(k, tab_y, y[i], 1.0 - x[i])
    return out


def _tri_basis_loop(nmax, a, b, c, x, y):
    # column of (n, k) is n(n+1)/2 + k; for each k the y factor advances one
    # step and the x factor runs its own recurrence up to degree nmax - k
    npts = x.shape[0]
    out = np.empty((npts, (nmax + 1) * (nmax + 2) // 2))
    tab_y = _rec_table(nmax, b, c)
    hy = np.ones(npts)
    hy_prev = np.zeros(npts)
    for k in range(nmax + 1):
        if k > 0:
            for i in range(npts):
                u = 1.0 - x[i]
                nxt = ((tab_y[k - 1, 1] * u - 2.0 * y[i]) * hy[i] - tab_y[k - 1, 2] * u * u * hy_prev[i]) * tab_y[k - 1, 0]
                hy_prev[i] = hy[i]
                hy[i] = nxt
        tab_x = _rec_table(nmax - k, a, b + c + 2.0 * k + 1.0)
        for i in range(npts):
            p_prev = 0.0
            p = 1.0
            for j in range(nmax - k + 1):
                n = k + j
                out[i, n * (n + 1) // 2 + k] = p * hy[i]
                if j < nmax - k:
                    nxt = ((tab_x[j, 1] - 2.0 * x[i]) * p - tab_x[j, 2] * p_prev) * tab_x[j, 0]
                    p_prev = p
                    p = nxt
    return out


def _racah_table_loop(alpha, beta, gamma, delta, N):
    out = np.empty((N + 1, N + 1))
    for m in range(N + 1):
        for ell in range(N + 1):
            total = 1.0
            term = 1.0
            for j in range(min(m, ell)):
                term *= (
                    (j - m)
                    * (m + alpha + beta + 1.0 + j)
                    * (j - ell)
                    * (ell + gamma + delta + 1.0 + j)
                    / ((alpha + 1.0 + j) * (beta + delta + 1.0 + j) * (gamma + 1.0 + j) * (j + 1.0))
                )
                total += term
            out[m, ell] = total
    return out


# ---------------------------------------------------------------------------
# vectorized numpy kernels


def _hom_jacobi_np(n, a, b, t, u):
    h_prev = np.zeros_like(t)
    h = np.ones_like(t)
    for j in range(n):
        cp, c0, cm = _rec_coeffs(j, a, b)
        h, h_prev = (((1.0 - c0) * u - 2.0 * t) * h - cm * u * u * h_prev) / cp, h
    return h


def _jacobi_values_np(n, a, b, x):
    return _hom_jacobi_np(n, a, b, x, np.ones_like(x))


def _tri_values_np(n, k, a, b, c, x, y):
    px = _jacobi_values_np(n - k, a, b + c + 2.0 * k + 1.0, x)
    return px * _hom_jacobi_np(k, b, c, y, 1.0 - x)


def _tri_basis_np(nmax, a, b, c, x, y):
    out = np.empty((x.shape[0], (nmax + 1) * (nmax + 2) // 2))
    u = 1.0 - x
    hy_prev = np.zeros_like(x)
    hy = np.ones_like(x)
    for k in range(nmax + 1):
        if k > 0:
            cp, c0, cm = _rec_coeffs(k - 1, b, c)
            hy, hy_prev = (((1.0 - c0) * u - 2.0 * y) * hy - cm * u * u * hy_prev) / cp, hy
        bk = b + c + 2.0 * k + 1.0
        p_prev = np.zeros_like(x)
        p = np.ones_like(x)
        for j in range(nmax - k + 1):
            n = k + j
            out[:, n * (n + 1) // 2 + k] = p * hy
            if j < nmax - k:
                cp, c0, cm = _rec_coeffs(j, a, bk)
                p, p_prev = (((1.0 - c0) - 2.0 * x) * p - cm * p_prev) / cp, p
    return out


def _racah_table_np(alpha, beta, gamma, delta, N):
    m = np.arange(N + 1, dtype=float)[:, None]
    ell = np.arange(N + 1, dtype=float)[None, :]
    total = np.ones((N + 1, N + 1))
    term = np.ones((N + 1, N + 1))
    for j in range(N):
        ratio = (
            (j - m)
            * (m + alpha + beta + 1.0 + j)
            * (j - ell)
            * (ell + gamma + delta + 1.0 + j)
            / ((alpha + 1.0 + j) * (beta + delta + 1.0 + j) * (gamma + 1.0 + j) * (j + 1.0))
        )
        # entries whose sum has already terminated get ratio 0 from (j-m)(j-ell)
        term = term * ratio
        total = total + term
    return total


numpy_kernels = {
    "jacobi_values": _jacobi_values_np,
    "tri_values": _tri_values_np,
    "tri_basis": _tri_basis_np,
    "racah_table": _racah_table_np,
}

if njit is not None:
    _rec_coeffs_loop = njit(cache=True)(_rec_coeffs)
    _rec_table = njit(cache=True)(_rec_table)
    _hom_jacobi_loop = njit(cache=True)(_hom_jacobi_loop)
    _tri_values_loop = njit(cache=True)(_tri_values_loop)
    numba_kernels = {
        "jacobi_values": njit(cache=True)(_jacobi_values_loop),
        "tri_values": _tri_values_loop,
        "tri_basis": njit(cache=True)(_tri_basis_loop),
        "racah_table": njit(cache=True)(_racah_table_loop),
    }
else:  # pragma: no cover
    numba_kernels = None

BACKEND = "numba" if (numba_kernels is not None and not _DISABLED) else "numpy"
_ACTIVE = numba_kernels if BACKEND == "numba" else numpy_kernels


def _points(x):
    return np.ascontiguousarray(np.atleast_1d(np.asarray(x, dtype=float)))


def jacobi_values(n, a, b, x):
    """``J_n^{(a,b)}`` at each point of ``x`` (1-D float array)."""
    return _ACTIVE["jacobi_values"](int(n), float(a), float(b), _points(x))


def tri_values(n, k, a, b, c, x, y):
    """``J_{n,k}^{(a,b,c)}`` at each point pair of ``x, y``; valid on the closed triangle."""
    return _ACTIVE["tri_values"](
        int(n), int(k), float(a), float(b), float(c), _points(x), _points(y)
    )


def tri_basis(nmax, a, b, c, x, y):
    """Matrix of all ``J_{n,k}`` with ``n <= nmax``; columns ordered by ``(n, k)``."""
    return _ACTIVE["tri_basis"](
        int(nmax), float(a), float(b), float(c), _points(x), _points(y)
    )


def racah_table(alpha, beta, gamma, delta, N):
    """Matrix ``R[m, ell]`` of Racah polynomial values for ``0 <= m, ell <= N``."""
    return _ACTIVE["racah_table"](
        float(alpha), float(beta), float(gamma), float(delta), int(N)
    )
