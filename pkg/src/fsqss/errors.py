"""Exception hierarchy shared across the package."""


class FsqssError(Exception):
    """Base class for all package-specific errors."""


class DomainError(FsqssError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NumericalError(FsqssError, ArithmeticError):
    """A numerical routine failed (overflow, non-convergence, bad matrix)."""


class DecompositionError(NumericalError):
    """A covariance matrix could not be factorized (not PSD within tolerance)."""


class DegenerateBeamError(FsqssError, ValueError):
    """Beam-geometry argument is too close to a removable singularity;
    the caller must evaluate the analytic limit instead."""


class PhysicalityError(FsqssError, ValueError):
    """A Gaussian state's covariance matrix violates the uncertainty relation."""


class ConfigError(FsqssError, ValueError):
    """Configuration text failed to parse or validate."""


class InsufficientDataError(FsqssError, ValueError):
    """Too few records for a statistical estimate."""
