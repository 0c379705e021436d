"""Exception types shared across the package."""


class FptError(Exception):
    """Base class for every error raised by this package."""


class PrimalityError(FptError, ValueError):
    pass


class RangeError(FptError, ValueError):
    pass


class FieldMismatch(FptError, TypeError):
    """Two operands live in different fields."""


class DivisionByZero(FptError, ZeroDivisionError):
    pass


class CapacityError(FptError, ValueError):
    """A search space or exponent exceeds the desk-scale limits."""


class ParityError(FptError, ValueError):
    pass


class DomainError(FptError, ValueError):
    """An argument lies outside the domain of a map (e.g. a degenerate cross-ratio)."""
