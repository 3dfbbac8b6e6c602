"""Differential realization of the rank-two Jacobi algebra and its certification.

The five generators act on polynomials in ``x, y``:

    X1 = x,  X3 = 1 - x - y,
    L1 = ((b+1)(1-x) - (b+c+2) y) d_y + y (1-x-y) d_yy,
    L3 = ((a+1) y - (b+1) x)(d_x - d_y) + x y (d_xx + d_yy - 2 d_xy),
    L  = x(1-x) d_xx + y(1-y) d_yy - 2xy d_xy
         + (a+1 - (s+3) x) d_x + (b+1 - (s+3) y) d_y,      s = a+b+c,

together with ``X2 = I - X1 - X3`` and ``L2 = L - L1 - L3``. Every relation
below is stated as ``lhs == rhs`` and checked by forming ``lhs - rhs`` as an
operator; with ``Fraction`` parameters the check is exact.

The relation table only uses commutators, anticommutators and products of
commuting elements, so it applies unchanged to the lattice matrices of
:mod:`trijacobi.lattice` (whose products come out in reversed order).
"""

from dataclasses import dataclass, field

import numpy as np

from .lattice import LatticeOp, build_lattice_realization, triangle_labels
from .poly import BivarPoly, PolyDiffOp, anticommutator, commutator
from .quadrature import triangle_rule
from .racah import racah_realization, racah_structure_constants
from .triangle import D3, tri_family_poly, tri_norm, tri_poly, tri_values

__all__ = [
    "RelationReport",
    "build_diff_realization",
    "RELATIONS",
    "check_relations",
    "verify_appendix_a",
    "verify_appendix_a_lattice",
    "verify_jacobi_identity",
    "verify_rank1_subalgebras",
    "verify_racah_lattice",
    "verify_racah_realization",
    "verify_intertwining",
    "verify_hermiticity",
]


@dataclass
class RelationReport:
    """Outcome of one identity check.

    ``residual`` is the operator (or number) ``lhs - rhs``; exact checks pass
    iff it is zero. ``size`` summarizes it: the number of nonzero stored
    coefficients for operators, or a float magnitude for numerical checks.
    """

    id: str
    description: str
    passed: bool
    size: float = 0
    residual: object = field(default=None, repr=False)
    detail: str = ""


def _residual_size(res):
    if isinstance(res, (PolyDiffOp, LatticeOp)):
        return res.nonzero_count()
    if isinstance(res, BivarPoly):
        return len(res)
    return abs(res)


def _exact_report(rid, description, residual, detail=""):
    zero = residual.is_zero()
    return RelationReport(rid, description, zero, _residual_size(residual), residual, detail)


# ---------------------------------------------------------------------------
# generators


def build_diff_realization(p):
    """The generators as :class:`PolyDiffOp` objects, keyed by name.

    Keys: ``X1, X2, X3, L1, L2, L3, L`` and the identity ``I``.
    """
    a, b, c = p
    s = a + b + c
    x = BivarPoly.x()
    y = BivarPoly.y()
    one = BivarPoly.constant(1)
    z = one - x - y
    ops = {
        "I": PolyDiffOp.identity(),
        "X1": PolyDiffOp.multiplication(x),
        "X3": PolyDiffOp.multiplication(z),
        "L1": PolyDiffOp(
            {
                (0, 1): (one - x) * (b + 1) - y * (b + c + 2),
                (0, 2): y * z,
            }
        ),
        "L3": PolyDiffOp(
            {
                (1, 0): y * (a + 1) - x * (b + 1),
                (0, 1): x * (b + 1) - y * (a + 1),
                (2, 0): x * y,
                (0, 2): x * y,
                (1, 1): x * y * (-2),
            }
        ),
        "L": PolyDiffOp(
            {
                (2, 0): x - x * x,
                (0, 2): y - y * y,
                (1, 1): x * y * (-2),
                (1, 0): (a + 1) - x * (s + 3),
                (0, 1): (b + 1) - y * (s + 3),
            }
        ),
    }
    ops["X2"] = ops["I"] - ops["X1"] - ops["X3"]
    ops["L2"] = ops["L"] - ops["L1"] - ops["L3"]
    return ops


# ---------------------------------------------------------------------------
# relation table: id -> (description, function(ops, a, b, c) -> (lhs, rhs))


def _cm(u, v):
    return commutator(u, v)


def _ac(u, v):
    return anticommutator(u, v)


def _relations():
    rel = {}

    def add(rid, description):
        def deco(func):
            rel[rid] = (description, func)
            return func

        return deco

    for left, right in (("L", "L1"), ("L", "L3"), ("L1", "X1"), ("L3", "X3"), ("X1", "X3")):
        rid = left + right
        rel[rid] = (
            f"[{left},{right}] = 0",
            lambda o, a, b, c, l=left, r=right: (_cm(o[l], o[r]), 0 * o["I"]),
        )

    @add("LX1L", "[[L,X1],L] = 2{X1,L} - 2L + 2L1 - (s+1)(s+3)X1 + (s+1)(a+1)")
    def _(o, a, b, c):
        s = a + b + c
        X1, L, L1, I = o["X1"], o["L"], o["L1"], o["I"]
        rhs = 2 * _ac(X1, L) - 2 * L + 2 * L1 - (s + 1) * (s + 3) * X1 + (s + 1) * (a + 1) * I
        return _cm(_cm(L, X1), L), rhs

    @add("LX1L3", "[[L,X1],L3] = {X1,L+L3} + {X3-1,L-L1} - (s+1)(a+1)(X1+X3-1) - (s+1)(b+1)X1")
    def _(o, a, b, c):
        s = a + b + c
        X1, X3, L, L1, L3, I = (o[k] for k in ("X1", "X3", "L", "L1", "L3", "I"))
        rhs = (
            _ac(X1, L + L3)
            + _ac(X3 - I, L - L1)
            - (s + 1) * (a + 1) * (X1 + X3 - I)
            - (s + 1) * (b + 1) * X1
        )
        return _cm(_cm(L, X1), L3), rhs

    @add("LX1X1", "[[L,X1],X1] = -2X1^2 + 2X1")
    def _(o, a, b, c):
        X1, L = o["X1"], o["L"]
        return _cm(_cm(L, X1), X1), -2 * (X1 * X1) + 2 * X1

    @add("LX1X3", "[[L,X1],X3] = -2X1X3")
    def _(o, a, b, c):
        return _cm(_cm(o["L"], o["X1"]), o["X3"]), -2 * (o["X1"] * o["X3"])

    @add("LX3L", "[[L,X3],L] = 2{X3,L} - 2L + 2L3 - (s+1)(s+3)X3 + (s+1)(c+1)")
    def _(o, a, b, c):
        s = a + b + c
        X3, L, L3, I = o["X3"], o["L"], o["L3"], o["I"]
        rhs = 2 * _ac(X3, L) - 2 * L + 2 * L3 - (s + 1) * (s + 3) * X3 + (s + 1) * (c + 1) * I
        return _cm(_cm(L, X3), L), rhs

    @add("LX3L1", "[[L,X3],L1] = {X1-1,L-L3} + {X3,L+L1} - (s+1)(c+1)(X1+X3-1) - (s+1)(b+1)X3")
    def _(o, a, b, c):
        s = a + b + c
        X1, X3, L, L1, L3, I = (o[k] for k in ("X1", "X3", "L", "L1", "L3", "I"))
        rhs = (
            _ac(X1 - I, L - L3)
            + _ac(X3, L + L1)
            - (s + 1) * (c + 1) * (X1 + X3 - I)
            - (s + 1) * (b + 1) * X3
        )
        return _cm(_cm(L, X3), L1), rhs

    @add("LX3X3", "[[L,X3],X3] = -2X3^2 + 2X3")
    def _(o, a, b, c):
        X3, L = o["X3"], o["L"]
        return _cm(_cm(L, X3), X3), -2 * (X3 * X3) + 2 * X3

    @add(
        "L1L3L1",
        "[[L1,L3],L1] = 2{L1,L3} + 2L1^2 - 2L1L + (b+c)(b+1)L2 - (b+c)(c+1)L3 - (b-c)(a+1)L1",
    )
    def _(o, a, b, c):
        L, L1, L3 = o["L"], o["L1"], o["L3"]
        rhs = (
            2 * _ac(L1, L3)
            + 2 * (L1 * L1)
            - 2 * (L1 * L)
            + (b + c) * (b + 1) * (L - L1 - L3)
            - (b + c) * (c + 1) * L3
            - (b - c) * (a + 1) * L1
        )
        return _cm(_cm(L1, L3), L1), rhs

    @add(
        "L1L3L3",
        "[[L1,L3],L3] = -2{L1,L3} - 2L3^2 + 2L3L - (a+b)(b+1)L2 + (a+b)(a+1)L1 + (b-a)(c+1)L3",
    )
    def _(o, a, b, c):
        L, L1, L3 = o["L"], o["L1"], o["L3"]
        rhs = (
            -2 * _ac(L1, L3)
            - 2 * (L3 * L3)
            + 2 * (L3 * L)
            - (a + b) * (b + 1) * (L - L1 - L3)
            + (a + b) * (a + 1) * L1
            + (b - a) * (c + 1) * L3
        )
        return _cm(_cm(L1, L3), L3), rhs

    @add("L1L3X1", "[[L1,L3],X1] = -{X1-1,L2} - {X3,L-L1} + (a+1)(b+1)X3 + (a+1)(c+1)(X1+X3-1)")
    def _(o, a, b, c):
        X1, X3, L, L1, L2, I = (o[k] for k in ("X1", "X3", "L", "L1", "L2", "I"))
        rhs = (
            -_ac(X1 - I, L2)
            - _ac(X3, L - L1)
            + (a + 1) * (b + 1) * X3
            + (a + 1) * (c + 1) * (X1 + X3 - I)
        )
        return _cm(_cm(L1, o["L3"]), X1), rhs

    @add("L1L3X3", "[[L1,L3],X3] = {X1,L-L3} + {X3-1,L2} - (c+1)(a+1)(X1+X3-1) - (c+1)(b+1)X1")
    def _(o, a, b, c):
        X1, X3, L, L3, L2, I = (o[k] for k in ("X1", "X3", "L", "L3", "L2", "I"))
        rhs = (
            _ac(X1, L - L3)
            + _ac(X3 - I, L2)
            - (c + 1) * (a + 1) * (X1 + X3 - I)
            - (c + 1) * (b + 1) * X1
        )
        return _cm(_cm(o["L1"], L3), X3), rhs

    @add("L1X3L1", "[[L1,X3],L1] = 2{X3,L1} + {X1,L1} - 2L1 - (b+c)(b+c+2)X3 + (b+c)(c+1)(1-X1)")
    def _(o, a, b, c):
        X1, X3, L1, I = o["X1"], o["X3"], o["L1"], o["I"]
        rhs = (
            2 * _ac(X3, L1)
            + _ac(X1, L1)
            - 2 * L1
            - (b + c) * (b + c + 2) * X3
            + (b + c) * (c + 1) * (I - X1)
        )
        return _cm(_cm(L1, X3), L1), rhs

    @add("L1X3X3", "[[L1,X3],X3] = -2X3^2 + 2(1-X1)X3")
    def _(o, a, b, c):
        X1, X3, I = o["X1"], o["X3"], o["I"]
        return _cm(_cm(o["L1"], X3), X3), -2 * (X3 * X3) + 2 * ((I - X1) * X3)

    @add("L3X1L3", "[[L3,X1],L3] = {2X1+X3-1,L3} - (a+b)(a+1)(X1+X3-1) - (a+b)(b+1)X1")
    def _(o, a, b, c):
        X1, X3, L3, I = o["X1"], o["X3"], o["L3"], o["I"]
        rhs = (
            _ac(2 * X1 + X3 - I, L3)
            - (a + b) * (a + 1) * (X1 + X3 - I)
            - (a + b) * (b + 1) * X1
        )
        return _cm(_cm(L3, X1), L3), rhs

    @add("L3X1X1", "[[L3,X1],X1] = -2X1(X1+X3-1)")
    def _(o, a, b, c):
        X1, X3, I = o["X1"], o["X3"], o["I"]
        return _cm(_cm(o["L3"], X1), X1), -2 * (X1 * (X1 + X3 - I))

    @add("identity", "[L1,X3] - [L,X3] = [L,X1] - [L3,X1]")
    def _(o, a, b, c):
        X1, X3, L, L1, L3 = (o[k] for k in ("X1", "X3", "L", "L1", "L3"))
        return _cm(L1, X3) - _cm(L, X3), _cm(L, X1) - _cm(L3, X1)

    @add("L2X2", "[L2,X2] = 0")
    def _(o, a, b, c):
        return _cm(o["L2"], o["X2"]), 0 * o["I"]

    @add("L1X2L1", "[[L1,X2],L1] = 2{X2,L1} + {X1,L1} - 2L1 - (b+c)(b+c+2)X2 + (b+c)(b+1)(1-X1)")
    def _(o, a, b, c):
        X1, X2, L1, I = o["X1"], o["X2"], o["L1"], o["I"]
        rhs = (
            2 * _ac(X2, L1)
            + _ac(X1, L1)
            - 2 * L1
            - (b + c) * (b + c + 2) * X2
            + (b + c) * (b + 1) * (I - X1)
        )
        return _cm(_cm(L1, X2), L1), rhs

    @add("L1X2X2", "[[L1,X2],X2] = -2X2^2 + 2(1-X1)X2")
    def _(o, a, b, c):
        X1, X2, I = o["X1"], o["X2"], o["I"]
        return _cm(_cm(o["L1"], X2), X2), -2 * (X2 * X2) + 2 * ((I - X1) * X2)

    @add("L2X1L2", "[[L2,X1],L2] = {2X1+X2-1,L2} - (a+c)(a+1)(X1+X2-1) - (a+c)(c+1)X1")
    def _(o, a, b, c):
        X1, X2, L2, I = o["X1"], o["X2"], o["L2"], o["I"]
        rhs = (
            _ac(2 * X1 + X2 - I, L2)
            - (a + c) * (a + 1) * (X1 + X2 - I)
            - (a + c) * (c + 1) * X1
        )
        return _cm(_cm(L2, X1), L2), rhs

    @add("L2X1X1", "[[L2,X1],X1] = -2X1(X1+X2-1)")
    def _(o, a, b, c):
        X1, X2, I = o["X1"], o["X2"], o["I"]
        return _cm(_cm(o["L2"], X1), X1), -2 * (X1 * (X1 + X2 - I))

    @add("LX2L", "[[L,X2],L] = 2{X2,L} - 2L + 2L2 - (s+1)(s+3)X2 + (s+1)(b+1)")
    def _(o, a, b, c):
        s = a + b + c
        X2, L, L2, I = o["X2"], o["L"], o["L2"], o["I"]
        rhs = 2 * _ac(X2, L) - 2 * L + 2 * L2 - (s + 1) * (s + 3) * X2 + (s + 1) * (b + 1) * I
        return _cm(_cm(L, X2), L), rhs

    @add("LX2X2", "[[L,X2],X2] = -2X2^2 + 2X2")
    def _(o, a, b, c):
        X2, L = o["X2"], o["L"]
        return _cm(_cm(L, X2), X2), -2 * (X2 * X2) + 2 * X2

    @add(
        "L1L2L1",
        "[[L1,L2],L1] = 2{L1,L2} + 2L1^2 - 2L1L + (b+c)(c+1)L3 - (b+c)(b+1)L2 - (c-b)(a+1)L1",
    )
    def _(o, a, b, c):
        L, L1, L2 = o["L"], o["L1"], o["L2"]
        rhs = (
            2 * _ac(L1, L2)
            + 2 * (L1 * L1)
            - 2 * (L1 * L)
            + (b + c) * (c + 1) * (L - L1 - L2)
            - (b + c) * (b + 1) * L2
            - (c - b) * (a + 1) * L1
        )
        return _cm(_cm(L1, L2), L1), rhs

    @add(
        "L1L2L2",
        "[[L1,L2],L2] = -2{L1,L2} - 2L2^2 + 2L2L - (a+c)(c+1)L3 + (a+c)(a+1)L1 + (c-a)(b+1)L2",
    )
    def _(o, a, b, c):
        L, L1, L2 = o["L"], o["L1"], o["L2"]
        rhs = (
            -2 * _ac(L1, L2)
            - 2 * (L2 * L2)
            + 2 * (L2 * L)
            - (a + c) * (c + 1) * (L - L1 - L2)
            + (a + c) * (a + 1) * L1
            + (c - a) * (b + 1) * L2
        )
        return _cm(_cm(L1, L2), L2), rhs

    return rel


RELATIONS = _relations()


def check_relations(ops, p, ids=None, transform=None):
    """Evaluate relations from :data:`RELATIONS` on a set of generators.

    ``transform`` post-processes each residual (the lattice check uses it to
    discard truncated rows). Returns a list of :class:`RelationReport`.
    """
    a, b, c = p
    reports = []
    for rid in ids or RELATIONS:
        description, func = RELATIONS[rid]
        lhs, rhs = func(ops, a, b, c)
        res = lhs - rhs
        if transform is not None:
            res = transform(res)
        reports.append(_exact_report(rid, description, res))
    return reports


def verify_appendix_a(p):
    """All generator relations on the differential realization, exactly."""
    return check_relations(build_diff_realization(p), p)


def verify_appendix_a_lattice(N, p):
    """The same relations on the difference realization, rows ``n <= N``.

    Each relation involves at most two factors that raise ``n``, so the
    operators are built at ``N + 2`` and the top two layers are discarded.
    """
    ops = build_lattice_realization(N + 2, p)
    reports = check_relations(ops, p, transform=lambda r: r.rows_where(lambda q: q[0] <= N))
    for r in reports:
        r.id = "lattice:" + r.id
    return reports


def verify_jacobi_identity(ops, names=("X1", "X3", "L1", "L3", "L")):
    """``[[A,B],C] + [[B,C],A] + [[C,A],B] = 0`` for all generator triples."""
    reports = []
    for i, A in enumerate(names):
        for j, B in enumerate(names[i + 1 :], i + 1):
            for C in names[j + 1 :]:
                u, v, w = ops[A], ops[B], ops[C]
                res = _cm(_cm(u, v), w) + _cm(_cm(v, w), u) + _cm(_cm(w, u), v)
                reports.append(
                    _exact_report(f"jacobi:{A},{B},{C}", "Jacobi identity of the commutator", res)
                )
    return reports


# ---------------------------------------------------------------------------
# rank-one subalgebras


def rank1_jacobi_residuals(K1, K2, alpha, beta):
    """Residuals of the rank-one Jacobi relations for a pair ``K1, K2``.

        [[K1,K2],K1] = 2{K1,K2} - 2K1 - (alpha+beta)(alpha+beta+2)K2 + (alpha+beta)(alpha+1)
        [K2,[K1,K2]] = 2K2^2 - 2K2
    """
    ab = alpha + beta
    one = K1 - K1 + 1
    C = _cm(K1, K2)
    r1 = _cm(C, K1) - (2 * _ac(K1, K2) - 2 * K1 - ab * (ab + 2) * K2 + ab * (alpha + 1) * one)
    r2 = _cm(K2, C) - (2 * (K2 * K2) - 2 * K2)
    return r1, r2


def rank1_jacobi_cleared_residuals(K1, Y, D, alpha, beta):
    """Rank-one Jacobi relations for ``K2 = Y D^-1`` with ``D`` central, multiplied through by ``D``."""
    ab = alpha + beta
    C = _cm(K1, Y)
    r1 = _cm(C, K1) - 2 * _ac(K1, Y) + 2 * (K1 * D) + ab * (ab + 2) * Y - ab * (alpha + 1) * D
    r2 = _cm(Y, C) - 2 * (Y * Y) + 2 * (Y * D)
    return r1, r2


def racah_residuals(K1, K2, const):
    """Residuals of the rank-one Racah relations

        [[K1,K2],K1] = 2K1^2 + 2{K1,K2} + xi K1 + eta1 K2 + zeta1
        [K2,[K1,K2]] = 2K2^2 + 2{K1,K2} + xi K2 + eta2 K1 + zeta2
    """
    one = K1 - K1 + 1
    C = _cm(K1, K2)
    anti = 2 * _ac(K1, K2)
    r1 = _cm(C, K1) - (
        2 * (K1 * K1) + anti + const["xi"] * K1 + const["eta1"] * K2 + const["zeta1"] * one
    )
    r2 = _cm(K2, C) - (
        2 * (K2 * K2) + anti + const["xi"] * K2 + const["eta2"] * K1 + const["zeta2"] * one
    )
    return r1, r2


def _pair_reports(rid, description, residuals, detail=""):
    return [
        _exact_report(f"{rid}:{i}", description, r, detail) for i, r in enumerate(residuals, 1)
    ]


def _family_residual(residual, g, p, N, k):
    # apply an operator residual to every family member with index k and n <= N
    out = BivarPoly()
    bad = []
    for n in range(k, N + 1):
        r = residual(tri_family_poly(g, n, k, p))
        if not r.is_zero():
            bad.append((n, k))
            out = out + r
    return out, bad


def verify_rank1_subalgebras(p, N=4):
    """Rank-one Jacobi and Racah structures inside the rank-two algebra.

    Quotients by central elements are checked in cleared form on the
    differential realization. Constructions whose ``K1`` depends on a fixed
    label ``k`` are checked on the matching lattice rows or family
    polynomials with ``n <= N``.
    """
    a, b, c = p
    s = a + b + c
    o = build_diff_realization(p)
    I = o["I"]
    reports = []

    cleared = (
        ("rank1:L1,X3/(X1-1)+1", "K1 = L1, K2 = (X1+X3-1)/(X1-1), alpha = b, beta = c",
         o["L1"], o["X1"] + o["X3"] - I, o["X1"] - I, b, c),
        ("rank1:L1,X3/(1-X1)", "K1 = L1, K2 = X3/(1-X1), alpha = c, beta = b",
         o["L1"], o["X3"], I - o["X1"], c, b),
        ("rank1:L3,X1/(X3-1)+1", "K1 = L3, K2 = (X1+X3-1)/(X3-1), alpha = b, beta = a",
         o["L3"], o["X1"] + o["X3"] - I, o["X3"] - I, b, a),
        ("rank1:L2,X3/(1-X2)", "K1 = L2, K2 = X3/(1-X2), alpha = c, beta = a",
         o["L2"], o["X3"], I - o["X2"], c, a),
    )
    for rid, description, K1, Y, D, alpha, beta in cleared:
        res = rank1_jacobi_cleared_residuals(K1, Y, D, alpha, beta)
        reports += _pair_reports(rid, description, res, "cleared by the central denominator")

    # K1 = L + k(k+s+2) with K2 = X1 on the lattice row of fixed k.
    lat = build_lattice_realization(N + 2, p)
    for k in range(N + 1):
        labels = [(n, k) for n in range(k, N + 3)]
        K1 = (lat["L"] + LatticeOp.diagonal(lat["L"].labels, lambda q: q[1] * (q[1] + s + 2)))
        K1 = K1.restrict(labels)
        K2 = lat["X1"].restrict(labels)
        res = rank1_jacobi_residuals(K1, K2, a, 2 * k + b + c + 1)
        res = [r.rows_where(lambda q: q[0] <= N) for r in res]
        reports += _pair_reports(
            f"rank1:L+k(k+s+2),X1@k={k}",
            "K1 = L + k(k+s+2), K2 = X1 on the fixed-k lattice row, alpha = a, beta = 2k+b+c+1",
            res,
        )

    # The same construction with X3 (pi family) and X2 (sigma family).
    family_cases = (
        ("X3", D3.PI, lambda k: (c, a + b + 2 * k + 1)),
        ("X2", D3.SIGMA, lambda k: (b, 2 * k + a + c + 1)),
    )
    for xname, g, params in family_cases:
        for k in range(N + 1):
            alpha, beta = params(k)
            K1 = o["L"] + k * (k + s + 2) * I
            res = rank1_jacobi_residuals(K1, o[xname], alpha, beta)
            for i, r in enumerate(res, 1):
                out, bad = _family_residual(r, g, p, N, k)
                reports.append(
                    RelationReport(
                        f"rank1:L+k(k+s+2),{xname}@k={k}:{i}",
                        f"K1 = L + k(k+s+2), K2 = {xname} on the {g.label} family with index k, "
                        f"alpha, beta = {alpha}, {beta}",
                        not bad,
                        len(out),
                        out,
                        f"failing labels {bad}" if bad else "",
                    )
                )

    reports += verify_racah_lattice(p, N)
    return reports


def lattice_racah_constants(n, p, swap_bc=False):
    """Racah structure constants of ``(L1, L3)`` on the degree-``n`` block.

    With ``swap_bc`` the roles of ``b`` and ``c`` are exchanged, which gives
    the constants of the pair ``(L1, L2)``.
    """
    a, b, c = p
    if swap_bc:
        b, c = c, b
    s = a + b + c
    Lval = -n * (n + s + 2)
    return {
        "xi": -(b + c) * (b + 1) - (b - c) * (a + 1) - 2 * Lval,
        "eta1": -(b + c) * (b + c + 2),
        "eta2": -(a + b) * (a + b + 2),
        "zeta1": (b + c) * (b + 1) * Lval,
        "zeta2": (a + b) * (b + 1) * Lval,
    }


def verify_racah_lattice(p, N=4):
    """``(L1, L3)`` and ``(L1, L2)`` on each fixed-degree block satisfy the Racah relations."""
    lat = build_lattice_realization(N, p)
    reports = []
    for n in range(N + 1):
        labels = [(n, k) for k in range(n + 1)]
        L1 = lat["L1"].restrict(labels)
        for other, swap in (("L3", False), ("L2", True)):
            K2 = lat[other].restrict(labels)
            res = racah_residuals(L1, K2, lattice_racah_constants(n, p, swap))
            reports += _pair_reports(
                f"racah:L1,{other}@n={n}",
                f"K1 = L1, K2 = {other} on the degree-{n} block with L = -n(n+s+2)",
                res,
            )
    return reports


def verify_racah_realization(rp):
    """The lattice operators of :func:`racah_realization` satisfy the Racah relations."""
    K1, K2 = racah_realization(rp)
    res = racah_residuals(K1, K2, racah_structure_constants(rp))
    return _pair_reports(f"racah:realization@N={rp.N}", "difference realization on 0..N", res)


# ---------------------------------------------------------------------------
# intertwining


_GENERATORS = ("X1", "X3", "L1", "L3", "L")


def _combination(row, polys):
    out = BivarPoly()
    for q, v in row.items():
        if q in polys:
            out = out + polys[q] * v
    return out


def verify_intertwining(N, p, names=_GENERATORS):
    """``W J_{n,k} = sum_q W[(n,k), q] J_q`` for every generator and ``n <= N``.

    Labels outside ``0 <= k <= n`` carry the zero polynomial. A first pass at
    ``n <= 3`` also tests the transposed reading of the lattice matrices;
    the convention found is recorded on every report.
    """
    diff = build_diff_realization(p)
    lat = build_lattice_realization(N + 1, p)
    polys = {q: tri_poly(*q, p) for q in triangle_labels(N + 1)}

    def ok_with(W, matrix, nmax):
        return all(
            diff[W](polys[(n, k)]) == _combination(matrix.row((n, k)), polys)
            for n in range(nmax + 1)
            for k in range(n + 1)
        )

    probe = min(N, 3)
    direct = all(ok_with(W, lat[W], probe) for W in names)
    transposed = all(ok_with(W, lat[W].transpose(), probe) for W in names)
    if direct:
        convention = "coefficients act on J_{n,k} directly; out-of-range J are zero"
    elif transposed:
        convention = "coefficients act through the transposed matrix"
    else:
        convention = "no consistent convention found at n <= 3"
    use_transpose = transposed and not direct

    reports = []
    for W in names:
        matrix = lat[W].transpose() if use_transpose else lat[W]
        bad = []
        total = BivarPoly()
        for n in range(N + 1):
            for k in range(n + 1):
                res = diff[W](polys[(n, k)]) - _combination(matrix.row((n, k)), polys)
                if not res.is_zero():
                    bad.append((n, k))
                    total = total + res
        detail = convention if not bad else f"{convention}; failing labels {bad}"
        reports.append(
            RelationReport(
                f"intertwine:{W}",
                f"differential {W} on J_(n,k) equals the lattice combination, n <= {N}",
                not bad,
                len(total),
                total,
                detail,
            )
        )
    return reports


# ---------------------------------------------------------------------------
# hermiticity


def verify_hermiticity(N, p, npts=None, tol=1e-10, names=_GENERATORS):
    """Symmetry of each generator in the orthonormal basis, two ways.

    ``lattice``: ``A[p, q] = W[p, q] sqrt(h_q / h_p)`` is symmetric on the
    block ``n <= N``. ``gram``: with quadrature, ``<J_p, W J_q>`` equals
    ``<W J_p, J_q>`` for the weight ``x^a y^b (1-x-y)^c``, relative to the
    largest entry. Floats are fine here.
    """
    npts = npts or N + 4
    labels = triangle_labels(N)
    h = np.array([float(tri_norm(n, k, p)) for n, k in labels])
    lat = build_lattice_realization(N, p)
    conj = np.sqrt(h[None, :] / h[:, None])
    diff = build_diff_realization(p)
    rule = triangle_rule(npts, p)
    x, y = rule.nodes[:, 0], rule.nodes[:, 1]
    basis = np.stack([tri_values(n, k, p, x, y) for n, k in labels])
    reports = []
    for W in names:
        A = lat[W].to_dense() * conj
        scale = max(np.abs(A).max(), 1.0)
        asym = float(np.abs(A - A.T).max() / scale)
        reports.append(
            RelationReport(
                f"hermitian:lattice:{W}",
                f"orthonormal-basis matrix of {W} is symmetric, n <= {N}",
                asym <= tol,
                residual=asym,
            )
        )
        image = np.stack([_poly_values(diff[W](tri_poly(n, k, p)), x, y) for n, k in labels])
        G = (basis * rule.weights) @ image.T
        gscale = max(np.abs(G).max(), 1.0)
        gasym = float(np.abs(G - G.T).max() / gscale)
        reports.append(
            RelationReport(
                f"hermitian:gram:{W}",
                f"<J_p, {W} J_q> = <{W} J_p, J_q> by quadrature, n <= {N}",
                gasym <= tol,
                residual=gasym,
            )
        )
    return reports


def _poly_values(poly, x, y):
    out = np.zeros_like(x)
    for (i, j), v in poly.terms.items():
        out = out + float(v) * x**i * y**j
    return out
