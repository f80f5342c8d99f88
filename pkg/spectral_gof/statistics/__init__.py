"""
Test statistics for the Spectral GoF package.
"""

from .value import StatisticValue
from .eta import COMPONENTS, PartitionBatch, PooledQuadraticForm, combine_components, eta_ts
from .mmd import ClosedFormNull, closed_form_null, mmd_hat
from .oracle import oracle_eta, oracle_modes, oracle_tail_bound
from .energy import energy_stat, pooled_distances

__all__ = [
    "StatisticValue",
    "COMPONENTS",
    "PartitionBatch",
    "PooledQuadraticForm",
    "combine_components",
    "eta_ts",
    "ClosedFormNull",
    "closed_form_null",
    "mmd_hat",
    "oracle_eta",
    "oracle_modes",
    "oracle_tail_bound",
    "energy_stat",
    "pooled_distances",
]
