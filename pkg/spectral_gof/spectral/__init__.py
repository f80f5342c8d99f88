"""
Spectral quantities for the Spectral GoF package.

Centered Gram eigensystems, the regularized sandwich operator, and the
degrees-of-freedom functionals N1 / N2 (empirical and population).
"""

from .eigensystem import (
    EigenSystem,
    SpectralSummary,
    build_G,
    centered_eigensystem,
    double_center,
    n1_hat,
    n2_hat,
    regularized_operator,
    shrinkage_ratios,
    summarize,
)
from .mercer import (
    FiniteRankMercer,
    MercerSystem,
    PeriodicSplineMercer,
    population_summary,
)

__all__ = [
    "EigenSystem",
    "SpectralSummary",
    "build_G",
    "centered_eigensystem",
    "double_center",
    "n1_hat",
    "n2_hat",
    "regularized_operator",
    "shrinkage_ratios",
    "summarize",
    "MercerSystem",
    "PeriodicSplineMercer",
    "FiniteRankMercer",
    "population_summary",
]
