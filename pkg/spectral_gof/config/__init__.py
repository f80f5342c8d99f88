"""
Configuration Package
"""
from .settings import (
    KERNEL,
    GRID,
    REGULARIZER,
    SPECTRAL,
    TEST,
    ORACLE,
    DISTRIBUTION,
    HARNESS,
    PLOT,
    LOGGING,
)
