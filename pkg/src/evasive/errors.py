"""Exception types shared across the package."""


class EvasiveError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(EvasiveError, ValueError):
    """Invalid parameters, wrong arity, or mixing elements of different fields."""


class FieldMismatchError(ParameterError):
    pass


class NotAMemberError(EvasiveError):
    """A point that was required to lie in the variety (or the set) does not."""


class DimensionError(EvasiveError):
    """Subspace dimension exceeds what the construction can handle."""


class SingularMatrixError(EvasiveError, ZeroDivisionError):
    pass


class GuardExceeded(EvasiveError):
    """An enumeration would exceed the configured size guard."""


class SearchExhausted(EvasiveError):
    pass
