"""
Spectral GoF - Spectral regularized kernel goodness-of-fit tests

A modular Python package for one-sample kernel tests with:
- Kernel and regularizer abstraction layers (pluggable families)
- Spectral statistics from a small null covariance sample
- Concentration and permutation calibration, adapted over kernel and lambda grids
- A Monte-Carlo power harness with figure presets

Author: Spectral GoF Contributors
License: MIT
"""

__version__ = "1.0.0"
__author__ = "Spectral GoF Contributors"

# Public API
from .errors import ConfigError, DataError, GofError, InvalidParameterError
from .kernels import AVAILABLE_KERNELS, GaussianKernel, PeriodicSplineKernel, FiniteRankKernel, make_kernel
from .regularizers import AVAILABLE_REGULARIZERS, TikhonovRegularizer, ShowalterRegularizer, get_regularizer_by_name
from .distributions import AVAILABLE_DISTRIBUTIONS, DistributionSpec, get_distribution, parse_spec
from .statistics import eta_ts, mmd_hat, oracle_eta
from .procedures import (
    METHODS,
    MethodConfig,
    TestOutcome,
    adaptive_oracle_test,
    adaptive_srct,
    adaptive_srpt,
    energy_perm_test,
    mmd_test,
    oracle_test,
    run_method,
    srct,
    srpt,
)

__all__ = [
    # Errors
    "GofError",
    "ConfigError",
    "DataError",
    "InvalidParameterError",
    # Kernels
    "AVAILABLE_KERNELS",
    "GaussianKernel",
    "PeriodicSplineKernel",
    "FiniteRankKernel",
    "make_kernel",
    # Regularizers
    "AVAILABLE_REGULARIZERS",
    "TikhonovRegularizer",
    "ShowalterRegularizer",
    "get_regularizer_by_name",
    # Distributions
    "AVAILABLE_DISTRIBUTIONS",
    "DistributionSpec",
    "get_distribution",
    "parse_spec",
    # Statistics
    "eta_ts",
    "mmd_hat",
    "oracle_eta",
    # Tests
    "METHODS",
    "MethodConfig",
    "TestOutcome",
    "srct",
    "adaptive_srct",
    "srpt",
    "adaptive_srpt",
    "oracle_test",
    "adaptive_oracle_test",
    "mmd_test",
    "energy_perm_test",
    "run_method",
]
