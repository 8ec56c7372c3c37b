"""Exception types shared across the package."""


class CavlossError(Exception):
    """Base class for all package errors."""


class ConfigError(CavlossError):
    """Invalid or missing configuration value; message names the field."""


class DomainError(CavlossError, ValueError):
    """Input outside the physical domain of an operation."""


class StepSizeError(CavlossError, ValueError):
    """Integrator step size too coarse for the requested dynamics."""


class DivergenceError(CavlossError, ArithmeticError):
    """Multiple-passage sum does not converge (lossless full revival)."""
