"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: domain/input problems exit 2, resource
caps exit 3, failed internal cross-checks exit 1.
"""


class EulerSetError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(EulerSetError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class InputError(DomainError):
    """Caller-supplied data is malformed or insufficient (e.g. rank-deficient)."""


class ResourceError(EulerSetError, RuntimeError):
    """A configured size cap would be exceeded."""


class InternalCheckError(EulerSetError, AssertionError):
    """Two independent computations disagreed. Always a bug, never user error."""

    def __init__(self, message: str, witness: dict | None = None):
        super().__init__(message)
        self.witness = witness or {}


class NotS3ValueError(DomainError):
    """The integer handed to the inverse map is not S(3, p) for any prime p."""


class NotPerfectSquareError(NotS3ValueError):
    pass


class NoIntegralPrimeError(NotS3ValueError):
    pass


class CompositeRecoveredError(NotS3ValueError):
    pass
