"""
Test procedures for the Spectral GoF package.

SRCT / SRPT and their adaptive unions, the oracle test, the MMD test and
the energy permutation baseline, plus the MethodConfig dispatch.
"""

from .outcome import GridCellResult, TestOutcome
from .permutation import (
    PermutationPlan,
    minimum_permutations,
    permutation_decision,
    rejection_budget,
)
from .concentration import adaptive_srct, b1_constant, srct, srct_threshold
from .permutation_tests import adaptive_srpt, cell_ensembles, energy_perm_test, srpt
from .oracle_test import THRESHOLDS, adaptive_oracle_test, chebyshev_threshold, oracle_test, oracle_threshold
from .mmd_test import mmd_test, mmd_threshold
from .dispatch import METHODS, MethodConfig, run_method

__all__ = [
    "GridCellResult",
    "TestOutcome",
    "PermutationPlan",
    "minimum_permutations",
    "permutation_decision",
    "rejection_budget",
    "srct",
    "adaptive_srct",
    "b1_constant",
    "srct_threshold",
    "srpt",
    "adaptive_srpt",
    "cell_ensembles",
    "energy_perm_test",
    "oracle_test",
    "adaptive_oracle_test",
    "chebyshev_threshold",
    "THRESHOLDS",
    "oracle_threshold",
    "mmd_test",
    "mmd_threshold",
    "METHODS",
    "MethodConfig",
    "run_method",
]
