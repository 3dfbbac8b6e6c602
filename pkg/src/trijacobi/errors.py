"""Exception and warning types raised by the library."""


class TriJacobiError(Exception):
    """Base class for all library errors."""


class DegenerateLowerParameter(TriJacobiError, ZeroDivisionError):
    """A lower parameter Pochhammer symbol vanishes inside a terminating sum."""


class DegenerateDenominator(TriJacobiError, ZeroDivisionError):
    """A coefficient denominator vanishes for the requested parameters."""


class PoleError(TriJacobiError, ValueError):
    """The Gamma function was requested at a nonpositive integer."""


class IrreducibleRatio(TriJacobiError, ValueError):
    """An exact Gamma ratio has arguments that do not differ by integers."""


class DomainError(TriJacobiError, ValueError):
    """A point or parameter lies outside the domain of an operation."""


class NegativeRatio(UserWarning):
    """Emitted when an orthonormal Racah function needs sqrt of a negative ratio.

    The value is still returned, with the sign carried outside the root.
    """
