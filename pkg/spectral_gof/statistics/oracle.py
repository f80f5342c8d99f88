"""
Oracle statistic from a known Mercer expansion.

With the null spectrum lambda_j and eigenfunctions phi_j known, the
regularized discrepancy is a weighted U-statistic in feature space:
    (1/(n(n-1))) sum_j g(lambda_j) lambda_j (S_j^2 - sum_i phi_j(X_i)^2)
where S_j = sum_i phi_j(X_i). The mean embedding is zero because each
phi_j is centered under P0.
"""

import numpy as np

from ..config import ORACLE
from ..errors import InvalidParameterError
from ..regularizers import BaseRegularizer, check_lambda
from ..spectral import MercerSystem
from .value import StatisticValue


def oracle_eta(
    X,
    reg: BaseRegularizer,
    lam: float,
    system: MercerSystem,
    k_max: int = ORACLE["k_max"],
) -> StatisticValue:
    """
    Oracle regularized statistic truncated at k_max frequencies.

    Args:
        X: Sample from P, shape (n,) or (n, 1)
        reg: Spectral regularizer
        lam: lambda > 0
        system: Mercer system of the kernel under P0
        k_max: Frequencies kept (two eigenpairs each for trigonometric systems)
    """
    lam = check_lambda(lam)
    values, per_mode = oracle_modes(X, system, k_max)
    weights = np.asarray(reg.apply(lam, values)) * values
    value = float(weights @ per_mode)
    return StatisticValue(value=value, lam=lam, kernel_id=system.NAME)


def oracle_tail_bound(system: MercerSystem, reg: BaseRegularizer, lam: float, k_max: int) -> float:
    """
    Bound on the truncation error of oracle_eta.

    Each dropped mode contributes at most 2 g(lambda_j) lambda_j, and
    g(lambda_j) <= C2 / lambda.
    """
    lam = check_lambda(lam)
    count = int(min(2 * int(k_max), system.size))
    return 2.0 * reg.C2 * system.tail_mass(count) / lam


def oracle_modes(X, system: MercerSystem, k_max: int = ORACLE["k_max"]):
    """
    Per-mode U-statistics of a sample.

    Returns:
        eigenvalues: lambda_j for the kept modes
        per_mode: (S_j^2 - sum_i phi_j(X_i)^2) / (n (n - 1))
    """
    if int(k_max) < 1:
        raise InvalidParameterError(f"k_max must be >= 1, got {k_max}")
    count = int(min(2 * int(k_max), system.size))
    Phi = system.features(X, count)
    n = Phi.shape[0]
    if n < 2:
        raise InvalidParameterError(f"oracle U-statistic needs n >= 2, got {n}")
    S = Phi.sum(axis=0)
    per_mode = (S ** 2 - np.sum(Phi ** 2, axis=0)) / (n * (n - 1))
    return system.eigenvalues(count), per_mode
