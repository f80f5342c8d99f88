"""
Exception hierarchy for the Spectral GoF package.

Precondition failures are also ValueErrors so callers that only know
numpy-style validation still catch them.
"""


class GofError(Exception):
    """Base class for all package errors."""


class InvalidParameterError(GofError, ValueError):
    """An operation was called outside its preconditions."""


class DataError(GofError, ValueError):
    """Sample data has the wrong shape, support, or is degenerate."""


class DegenerateBandwidthError(DataError):
    """The median heuristic collapsed to zero."""


class SpectralAssemblyError(DataError):
    """A covariance matrix has eigenvalues too negative to be round-off."""


class ConfigError(GofError, ValueError):
    """An experiment or CLI configuration is invalid."""


class MissingClosedFormError(ConfigError):
    """No closed-form null mean embedding exists for a (kernel, null) pair."""


class RegularizerConstantError(GofError):
    """A regularizer failed the scan of its declared constants."""
