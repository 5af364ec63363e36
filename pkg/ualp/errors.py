# errors.py
"""Exception types raised by the ualp package.

Each error also inherits the builtin it specializes, so callers may catch
either ``DomainError`` or plain ``ValueError``.
"""


class UALPError(Exception):
    """Base class for every error raised by this package."""


class DomainError(UALPError, ValueError):
    """An argument lies outside the domain an operation supports."""


class RangeError(UALPError, ArithmeticError):
    """An argument lies outside the range an algorithm is accurate on."""


class IntegrandEvaluationError(UALPError, FloatingPointError):
    """The integrand returned NaN or an infinite value at a quadrature node."""


class ArgumentExcursionError(UALPError, AssertionError):
    """A composed argument left [-1, 1] by more than rounding noise."""


class UnknownIdentityError(UALPError, ValueError):
    """The requested identity name is not one this package can verify."""


class GridEntryError(UALPError, ValueError):
    """A verification grid entry is missing fields or holds invalid values."""
