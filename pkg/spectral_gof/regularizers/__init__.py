"""
Spectral regularizers for the Spectral GoF package.

Provides the filter functions g_lambda applied to the spectrum of the
empirical covariance operator, with the constants the thresholds need.
"""

from .base_regularizer import BaseRegularizer, check_lambda
from .tikhonov import TikhonovRegularizer
from .showalter import ShowalterRegularizer

from ..errors import ConfigError

# Registry of all available regularizers
AVAILABLE_REGULARIZERS = [
    TikhonovRegularizer,
    ShowalterRegularizer,
]


def get_regularizer_by_name(name: str) -> BaseRegularizer:
    """
    Get a regularizer instance by family name.

    Raises:
        ConfigError: unknown family
    """
    for regularizer_class in AVAILABLE_REGULARIZERS:
        if regularizer_class.FAMILY == name:
            return regularizer_class()
    known = ", ".join(r.FAMILY for r in AVAILABLE_REGULARIZERS)
    raise ConfigError(f"unknown regularizer '{name}' (known: {known})")


__all__ = [
    "BaseRegularizer",
    "TikhonovRegularizer",
    "ShowalterRegularizer",
    "AVAILABLE_REGULARIZERS",
    "check_lambda",
    "get_regularizer_by_name",
]
