"""Exception types shared across the package."""


class GWQuotError(Exception):
    """Base class for all package errors."""


class ParameterError(GWQuotError, ValueError):
    """An argument is outside the documented domain (bad degrees, malformed
    partitions, classes from the wrong model, ...)."""


class UnsupportedModelError(GWQuotError, TypeError):
    """The requested operation does not apply to this kind of ring model
    (e.g. WDVV reconstruction on a Grassmannian)."""


class UnsupportedConfigurationError(GWQuotError):
    """A structurally valid request the engine cannot evaluate, such as a
    k-point Grassmannian comparison with k != 3."""


class InternalCheckError(GWQuotError, AssertionError):
    """A consistency condition that should be a theorem failed at runtime."""
