"""Exact bivariate polynomials and polynomial-coefficient differential operators.

:class:`BivarPoly` stores a sparse map ``(i, j) -> coefficient`` for the
monomial ``x**i * y**j``. :class:`PolyDiffOp` stores a map
``(dx, dy) -> BivarPoly`` for the term ``p(x, y) d^dx/dx d^dy/dy``, always in
normal form with the coefficients to the left of the derivatives. Both are
immutable in practice: every operation returns a new object.

Coefficients are whatever scalars the caller supplies. ``Fraction`` inputs
give exact arithmetic, which is what the identity checks rely on.
"""

from fractions import Fraction
from math import comb

__all__ = ["BivarPoly", "PolyDiffOp", "commutator", "anticommutator"]


def _scalar(value):
    return isinstance(value, (int, float, complex, Fraction))


class BivarPoly:
    """Sparse polynomial in ``x`` and ``y``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    # construction ---------------------------------------------------------
    @classmethod
    def constant(cls, value):
        return cls({(0, 0): value})

    @classmethod
    def monomial(cls, i, j, coeff=1):
        return cls({(i, j): coeff})

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    @classmethod
    def from_univariate(cls, coeffs, var="x"):
        """Build from ascending coefficients ``[c0, c1, ...]`` in one variable."""
        if var == "x":
            return cls({(i, 0): c for i, c in enumerate(coeffs)})
        if var == "y":
            return cls({(0, j): c for j, c in enumerate(coeffs)})
        raise ValueError("var must be 'x' or 'y'")

    @classmethod
    def coerce(cls, other):
        if isinstance(other, BivarPoly):
            return other
        if _scalar(other):
            return cls.constant(other)
        return NotImplemented

    # ring operations ------------------------------------------------------
    def __add__(self, other):
        other = BivarPoly.coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = BivarPoly.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _scalar(other):
            return BivarPoly({k: v * other for k, v in self.terms.items()})
        if not isinstance(other, BivarPoly):
            return NotImplemented
        out = {}
        for (i1, j1), v1 in self.terms.items():
            for (i2, j2), v2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + v1 * v2
        return BivarPoly(out)

    def __rmul__(self, other):
        if _scalar(other):
            return BivarPoly({k: other * v for k, v in self.terms.items()})
        return NotImplemented

    def __pow__(self, power):
        if not isinstance(power, int) or power < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = BivarPoly.constant(1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other):
        other = BivarPoly.coerce(other)
        if other is NotImplemented:
            return False
        return (self - other).is_zero()

    __hash__ = None

    # inspection -----------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def total_degree(self):
        """Total degree; the zero polynomial has degree -1."""
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    def coeff(self, i, j):
        return self.terms.get((i, j), 0)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "BivarPoly(0)"
        parts = [f"({v})*x^{i}*y^{j}" for (i, j), v in sorted(self.terms.items())]
        return "BivarPoly(" + " + ".join(parts) + ")"

    # calculus and evaluation ---------------------------------------------
    def diff(self, dx=0, dy=0):
        """Partial derivative ``d^dx/dx d^dy/dy``."""
        out = {}
        for (i, j), v in self.terms.items():
            if i < dx or j < dy:
                continue
            factor = 1
            for t in range(dx):
                factor *= i - t
            for t in range(dy):
                factor *= j - t
            out[(i - dx, j - dy)] = v * factor
        return BivarPoly(out)

    def __call__(self, x, y):
        total = 0
        for (i, j), v in self.terms.items():
            total = total + v * x**i * y**j
        return total

    def substitute(self, px, py):
        """Compose with polynomial maps: returns ``self(px(x, y), py(x, y))``."""
        px = BivarPoly.coerce(px)
        py = BivarPoly.coerce(py)
        max_i = max((i for i, _ in self.terms), default=0)
        max_j = max((j for _, j in self.terms), default=0)
        xp = [BivarPoly.constant(1)]
        for _ in range(max_i):
            xp.append(xp[-1] * px)
        yp = [BivarPoly.constant(1)]
        for _ in range(max_j):
            yp.append(yp[-1] * py)
        result = BivarPoly()
        for (i, j), v in self.terms.items():
            result = result + (xp[i] * yp[j]) * v
        return result

    def map_coeffs(self, func):
        return BivarPoly({k: func(v) for k, v in self.terms.items()})


class PolyDiffOp:
    """Differential operator ``sum p_{ij}(x, y) d^i/dx^i d^j/dy^j`` in normal form."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for k, p in (terms or {}).items():
            p = BivarPoly.coerce(p)
            if not p.is_zero():
                self.terms[k] = p

    @classmethod
    def identity(cls):
        return cls({(0, 0): BivarPoly.constant(1)})

    @classmethod
    def multiplication(cls, poly):
        """The operator of multiplication by ``poly``."""
        return cls({(0, 0): BivarPoly.coerce(poly)})

    @classmethod
    def partial(cls, dx=0, dy=0):
        return cls({(dx, dy): BivarPoly.constant(1)})

    def __add__(self, other):
        if _scalar(other):
            other = PolyDiffOp.identity() * other
        if not isinstance(other, PolyDiffOp):
            return NotImplemented
        out = dict(self.terms)
        for k, p in other.terms.items():
            out[k] = out[k] + p if k in out else p
        return PolyDiffOp(out)

    __radd__ = __add__

    def __neg__(self):
        return PolyDiffOp({k: -p for k, p in self.terms.items()})

    def __sub__(self, other):
        if _scalar(other):
            other = PolyDiffOp.identity() * other
        if not isinstance(other, PolyDiffOp):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        """Scalar multiple, or composition ``self o other`` for another operator."""
        if _scalar(other):
            return PolyDiffOp({k: p * other for k, p in self.terms.items()})
        if not isinstance(other, PolyDiffOp):
            return NotImplemented
        out = {}
        for (a1, a2), p in self.terms.items():
            for (b1, b2), q in other.terms.items():
                # p d^a (q d^b) = sum_g C(a,g) p (d^g q) d^(a-g+b)
                for g1 in range(a1 + 1):
                    for g2 in range(a2 + 1):
                        dq = q.diff(g1, g2)
                        if dq.is_zero():
                            continue
                        coeff = p * dq * (comb(a1, g1) * comb(a2, g2))
                        key = (a1 - g1 + b1, a2 - g2 + b2)
                        out[key] = out[key] + coeff if key in out else coeff
        return PolyDiffOp(out)

    def __rmul__(self, other):
        if _scalar(other):
            return PolyDiffOp({k: other * p for k, p in self.terms.items()})
        return NotImplemented

    def __call__(self, poly):
        """Apply the operator to a polynomial."""
        result = BivarPoly()
        for (dx, dy), p in self.terms.items():
            result = result + p * poly.diff(dx, dy)
        return result

    def is_zero(self):
        return not self.terms

    def nonzero_count(self):
        """Number of nonzero monomial coefficients across all terms."""
        return sum(len(p) for p in self.terms.values())

    def __eq__(self, other):
        if not isinstance(other, PolyDiffOp):
            return False
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "PolyDiffOp(0)"
        parts = [f"{p!r}*D[{dx},{dy}]" for (dx, dy), p in sorted(self.terms.items())]
        return "PolyDiffOp(" + " + ".join(parts) + ")"


def commutator(a, b):
    """``ab - ba`` for any objects supporting ``*`` and ``-``."""
    return a * b - b * a


def anticommutator(a, b):
    return a * b + b * a
