"""Exception hierarchy shared across the package."""


class LinSympError(Exception):
    """Base class for all library errors."""


class FormatError(LinSympError):
    """Malformed input: bad JSON shape, bad rational literal, zero denominator."""


class DomainError(LinSympError):
    """Input is well-formed but violates an operation's precondition."""


class DimensionError(DomainError):
    """Matrix or vector dimensions do not fit the operation."""


class NotSymplecticError(DomainError):
    """The operation requires a symplectic matrix and the input is not one."""


class SingularMatrixError(DomainError):
    """Exact inversion hit a singular matrix."""


class InvariantViolation(LinSympError):
    """A theorem-backed internal invariant failed: a bug, not a user error."""
