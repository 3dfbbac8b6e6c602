"""Sparse operators on finite label sets and the difference realization on (n, k).

A :class:`LatticeOp` ``W`` stores rows ``p -> {q: W[p, q]}``. In the
difference realization the convention is

    W~ J_p = sum_q W[p, q] J_q,

so the matrix attached to a product of differential operators ``A~ B~`` is
``B A`` (the order reverses). Double commutators, anticommutators and
products of commuting elements are unchanged by this reversal, so every
algebra relation can be checked directly on the matrices.

Entries pointing at labels outside the label set are dropped when an
operator is built. On the triangle lattice ``{(n, k): 0 <= k <= n <= N}``
this is the convention ``J_{n,k} = 0`` outside ``0 <= k <= n``, and it also
truncates the ``n + 1`` neighbours at ``n = N``. Products are therefore only
reliable on rows with ``n <= N - d`` where ``d`` is the number of factors
that raise ``n``; callers build at a larger ``N`` and compare those rows.
"""

from fractions import Fraction

import numpy as np

from .errors import DegenerateDenominator
from .hyper import exact_div, product_ratio

__all__ = [
    "LatticeOp",
    "triangle_labels",
    "x1_hat",
    "x3_hat",
    "l1_hat",
    "l3_hat",
    "l_hat",
    "build_lattice_realization",
]


_HALF = Fraction(1, 2)


def _scalar(value):
    return isinstance(value, (int, float, Fraction))


class LatticeOp:
    """Sparse matrix indexed by an ordered tuple of hashable labels."""

    __slots__ = ("labels", "index", "rows")

    def __init__(self, labels, rows=None):
        self.labels = tuple(labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        self.rows = {}
        for p, row in (rows or {}).items():
            if p not in self.index:
                raise KeyError(f"row label {p!r} is not in the label set")
            clean = {q: v for q, v in row.items() if q in self.index and v != 0}
            if clean:
                self.rows[p] = clean

    @classmethod
    def identity(cls, labels):
        return cls(labels, {p: {p: 1} for p in labels})

    @classmethod
    def diagonal(cls, labels, func):
        return cls(labels, {p: {p: func(p)} for p in labels})

    def _check(self, other):
        if self.labels != other.labels:
            raise ValueError("lattice operators live on different label sets")

    def __add__(self, other):
        if _scalar(other):
            other = LatticeOp.identity(self.labels) * other
        if not isinstance(other, LatticeOp):
            return NotImplemented
        self._check(other)
        rows = {p: dict(r) for p, r in self.rows.items()}
        for p, r in other.rows.items():
            target = rows.setdefault(p, {})
            for q, v in r.items():
                target[q] = target.get(q, 0) + v
        return LatticeOp(self.labels, rows)

    __radd__ = __add__

    def __neg__(self):
        return LatticeOp(
            self.labels, {p: {q: -v for q, v in r.items()} for p, r in self.rows.items()}
        )

    def __sub__(self, other):
        if _scalar(other):
            other = LatticeOp.identity(self.labels) * other
        if not isinstance(other, LatticeOp):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        """Scalar multiple or matrix product ``self @ other``."""
        if _scalar(other):
            return LatticeOp(
                self.labels,
                {p: {q: v * other for q, v in r.items()} for p, r in self.rows.items()},
            )
        if not isinstance(other, LatticeOp):
            return NotImplemented
        self._check(other)
        rows = {}
        for p, r in self.rows.items():
            out = {}
            for q, v in r.items():
                for t, u in other.rows.get(q, {}).items():
                    out[t] = out.get(t, 0) + v * u
            rows[p] = out
        return LatticeOp(self.labels, rows)

    __matmul__ = __mul__

    def __rmul__(self, other):
        if _scalar(other):
            return self * other
        return NotImplemented

    def entry(self, p, q):
        return self.rows.get(p, {}).get(q, 0)

    def row(self, p):
        return dict(self.rows.get(p, {}))

    def restrict(self, labels):
        """Sub-block on ``labels`` (rows and columns)."""
        labels = tuple(labels)
        keep = set(labels)
        return LatticeOp(
            labels,
            {
                p: {q: v for q, v in r.items() if q in keep}
                for p, r in self.rows.items()
                if p in keep
            },
        )

    def rows_where(self, predicate):
        """Copy keeping only rows whose label satisfies ``predicate``."""
        return LatticeOp(
            self.labels, {p: dict(r) for p, r in self.rows.items() if predicate(p)}
        )

    def transpose(self):
        rows = {}
        for p, r in self.rows.items():
            for q, v in r.items():
                rows.setdefault(q, {})[p] = v
        return LatticeOp(self.labels, rows)

    def is_zero(self):
        return not self.rows

    def nonzero_count(self):
        return sum(len(r) for r in self.rows.values())

    def max_abs(self):
        return max((abs(v) for r in self.rows.values() for v in r.values()), default=0)

    def to_dense(self, dtype=float):
        out = np.zeros((len(self.labels), len(self.labels)), dtype=dtype)
        for p, r in self.rows.items():
            for q, v in r.items():
                out[self.index[p], self.index[q]] = v
        return out

    def __eq__(self, other):
        if not isinstance(other, LatticeOp) or self.labels != other.labels:
            return False
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        return f"LatticeOp({len(self.labels)} labels, {self.nonzero_count()} nonzeros)"


def triangle_labels(N):
    """Labels ``(n, k)`` with ``0 <= k <= n <= N`` in lexicographic order."""
    return [(n, k) for n in range(N + 1) for k in range(n + 1)]


def _in_range(n, k):
    return 0 <= k <= n


def _bc_ratio(k, b, c):
    # (b+c)/(2k+b+c), identically 1 at k = 0 (removes 0/0 when b+c = 0)
    return 1 if k == 0 else product_ratio([b + c], [2 * k + b + c], "(b+c)/(2k+b+c)")


def _bc1_ratio(k, b, c):
    # (k+b+c+1)/(2k+b+c+1), identically 1 at k = 0
    return 1 if k == 0 else product_ratio(
        [k + b + c + 1], [2 * k + b + c + 1], "(k+b+c+1)/(2k+b+c+1)"
    )


def x1_hat(n, k, p):
    """Row ``(n, k)`` of the multiplication-by-``x`` operator; in-range labels only."""
    a, b, c = p
    s = a + b + c
    row = {}
    row[(n + 1, k)] = product_ratio(
        [-(n - k + 1), n + k + s + 2], [2 * n + s + 2, 2 * n + s + 3], "X1 (n+1,k)"
    )
    if n == k:
        lead = product_ratio([2 * k - a + b + c + 1], [2 * n + s + 3], "X1 (n,k)")
    else:
        lead = product_ratio(
            [2 * k + s + 1, 2 * k - a + b + c + 1],
            [2 * n + s + 1, 2 * n + s + 3],
            "X1 (n,k)",
        )
    row[(n, k)] = exact_div(1 - lead, 2)
    if _in_range(n - 1, k):
        row[(n - 1, k)] = product_ratio(
            [-(n - k + a), n + k + b + c + 1], [2 * n + s + 1, 2 * n + s + 2], "X1 (n-1,k)"
        )
    return row


def x3_hat(n, k, p):
    """Row ``(n, k)`` of the multiplication-by-``1-x-y`` operator (nine shifts)."""
    a, b, c = p
    s = a + b + c
    bc = b + c
    # (I - X1)/2 plus the shift terms below
    row = {(n, k): _HALF}
    for q, v in x1_hat(n, k, p).items():
        row[q] = row.get(q, 0) - v * _HALF

    def add(q, value):
        if _in_range(*q):
            row[q] = row.get(q, 0) + value

    r0 = _bc_ratio(k, b, c)
    r1 = _bc1_ratio(k, b, c)
    P = (2 * n + s + 1) * (2 * n + s + 3)
    add(
        (n + 1, k + 1),
        (k + 1) * r1 * product_ratio(
            [n + k + s + 2, n + k + s + 3],
            [2 * k + bc + 2, 2 * n + s + 2, 2 * n + s + 3],
            "X3 (n+1,k+1)",
        ),
    )
    if _in_range(n, k + 1):
        add(
            (n, k + 1),
            2 * (k + 1) * r1 * product_ratio(
                [n - k + a, n + k + s + 2],
                [2 * k + bc + 2, 2 * n + s + 1, 2 * n + s + 3],
                "X3 (n,k+1)",
            ),
        )
    if _in_range(n - 1, k + 1):
        add(
            (n - 1, k + 1),
            (k + 1) * r1 * product_ratio(
                [n - k + a - 1, n - k + a],
                [2 * k + bc + 2, 2 * n + s + 1, 2 * n + s + 2],
                "X3 (n-1,k+1)",
            ),
        )
    # (c^2 - b^2) terms, written as (c-b) * (b+c)/(2k+b+c) * ...
    add(
        (n + 1, k),
        (c - b) * r0 * product_ratio(
            [n - k + 1, n + k + s + 2],
            [2, 2 * k + bc + 2, 2 * n + s + 2, 2 * n + s + 3],
            "X3 (n+1,k)",
        ),
    )
    if P == 0 or 2 * k + bc + 2 == 0:
        raise DegenerateDenominator("X3 (n,k): denominator vanishes")
    inner = exact_div(r0 * (1 + exact_div(1 - a * a, P)), 2 * k + bc + 2) + exact_div(bc, P)
    add((n, k), _HALF * _HALF * (c - b) * inner)
    if _in_range(n - 1, k):
        add(
            (n - 1, k),
            (c - b) * r0 * product_ratio(
                [n - k + a, n + k + bc + 1],
                [2, 2 * k + bc + 2, 2 * n + s + 1, 2 * n + s + 2],
                "X3 (n-1,k)",
            ),
        )
    if k >= 1:
        den = [2 * k + bc, 2 * k + bc + 1]
        add(
            (n + 1, k - 1),
            product_ratio(
                [k + b, k + c, n - k + 1, n - k + 2],
                den + [2 * n + s + 2, 2 * n + s + 3],
                "X3 (n+1,k-1)",
            ),
        )
        add(
            (n, k - 1),
            2 * product_ratio(
                [k + b, k + c, n - k + 1, n + k + bc + 1],
                den + [2 * n + s + 1, 2 * n + s + 3],
                "X3 (n,k-1)",
            ),
        )
        if _in_range(n - 1, k - 1):
            add(
                (n - 1, k - 1),
                product_ratio(
                    [k + b, k + c, n + k + bc, n + k + bc + 1],
                    den + [2 * n + s + 1, 2 * n + s + 2],
                    "X3 (n-1,k-1)",
                ),
            )
    return row


def l1_hat(n, k, p):
    a, b, c = p
    return {(n, k): -k * (k + b + c + 1)}


def l_hat(n, k, p):
    a, b, c = p
    return {(n, k): -n * (n + a + b + c + 2)}


def l3_hat(n, k, p):
    """Row ``(n, k)`` of ``L3``: tridiagonal in ``k`` at fixed ``n``."""
    a, b, c = p
    s = a + b + c
    bc = b + c
    row = {}
    if k >= 1:
        row[(n, k - 1)] = product_ratio(
            [k + b, k + c, n - k + 1, n + k + bc + 1],
            [2 * k + bc, 2 * k + bc + 1],
            "L3 (n,k-1)",
        )
    if k + 1 <= n:
        row[(n, k + 1)] = (k + 1) * _bc1_ratio(k, b, c) * product_ratio(
            [n - k + a, n + k + s + 2], [2 * k + bc + 2], "L3 (n,k+1)"
        )
    diag = (k - n) * (n - k + a + b + 1)
    if k >= 1:
        diag = diag - product_ratio(
            [k, k + c, n - k + 1, n - k + a + 1], [2 * k + bc], "L3 (n,k)"
        )
    diag = diag + product_ratio(
        [k + 1, k + c + 1, n - k, n - k + a], [2 * k + bc + 2], "L3 (n,k)"
    )
    row[(n, k)] = diag
    return row


_ROW_BUILDERS = {
    "X1": x1_hat,
    "X3": x3_hat,
    "L1": l1_hat,
    "L3": l3_hat,
    "L": l_hat,
}


def build_lattice_realization(N, p):
    """Difference operators on ``{(n, k): 0 <= k <= n <= N}``.

    Returns a dict with ``X1, X3, L1, L3, L`` plus the derived
    ``X2 = I - X1 - X3``, ``L2 = L - L1 - L3`` and the identity ``I``.
    Rational ``p`` gives exact entries.
    """
    labels = triangle_labels(N)
    ops = {
        name: LatticeOp(labels, {(n, k): build(n, k, p) for (n, k) in labels})
        for name, build in _ROW_BUILDERS.items()
    }
    ident = LatticeOp.identity(labels)
    ops["I"] = ident
    ops["X2"] = ident - ops["X1"] - ops["X3"]
    ops["L2"] = ops["L"] - ops["L1"] - ops["L3"]
    return ops
