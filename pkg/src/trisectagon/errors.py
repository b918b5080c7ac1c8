"""Exception types shared across the package."""


class TrisectagonError(Exception):
    """Base class for all package errors."""


class InvalidArgumentError(TrisectagonError, ValueError):
    """An argument violates an operation's precondition."""


class DomainError(TrisectagonError, ValueError):
    """Input is structurally valid but outside the mathematical domain
    of the operation (e.g. a cubic without three real roots)."""


class PrecisionError(TrisectagonError, ArithmeticError):
    """An internal consistency check failed at the working precision.

    This signals a bug (wrong branch pairing, unstable formula), never a
    user error, and must not be swallowed."""
