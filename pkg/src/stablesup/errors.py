"""Exception hierarchy shared by every evaluator."""


class StableSupError(Exception):
    """Base class for all package errors."""


class ParameterDomainError(StableSupError, ValueError):
    """An argument lies outside the domain of the requested function.

    ``field`` names the offending argument.
    """

    def __init__(self, field, value, message=None):
        self.field = field
        self.value = value
        super().__init__(message or f"{field}={value!r} is out of range")


class PrecisionLossError(StableSupError, ArithmeticError):
    """A series evaluation lost too many digits to cancellation.

    The diagnostics of the failed evaluation are attached as ``diag``.
    """

    def __init__(self, message, diag=None):
        self.diag = diag
        super().__init__(message)


class QuadratureError(StableSupError, RuntimeError):
    """A quadrature or acceleration scheme failed to reach its tolerance."""

    def __init__(self, message, error_estimate=float("nan")):
        self.error_estimate = error_estimate
        super().__init__(message)


class FitError(StableSupError, RuntimeError):
    """A power-law fit could not be performed on the supplied data."""
