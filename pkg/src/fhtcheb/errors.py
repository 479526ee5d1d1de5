"""Exception types shared across the package."""


class FhtChebError(ValueError):
    """Base class for all library errors."""


class InvalidSizeError(FhtChebError):
    """Grid or matrix size below the supported minimum."""


class DomainError(FhtChebError):
    """Argument outside [-1, 1] or outside an operation's stated domain."""


class GridMismatchError(FhtChebError):
    """Operands sampled on incompatible grids, or grid kind not matching the operation."""


class InputError(FhtChebError):
    """Malformed or inconsistent input file (CSV parse failure, wrong grid)."""


class ParameterError(FhtChebError):
    """Invalid weight parameter (e.g. |eta| >= pi/4) or solver parameter."""


class ReducedAccuracyWarning(UserWarning):
    """Oracle evaluated at a known kink of the integrand; accuracy is degraded."""
