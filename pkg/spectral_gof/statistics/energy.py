"""Energy distance between a sample and a null sample."""

import numpy as np
from scipy.spatial.distance import cdist

from ..errors import DataError, InvalidParameterError
from ..kernels.base_kernel import as_points
from .value import StatisticValue


def energy_stat(X, X0) -> StatisticValue:
    """
    U-statistic energy distance.

    2 mean ||X - X0|| - mean_{i != j} ||X_i - X_j|| - mean_{i != j} ||X0_i - X0_j||

    Args:
        X: Sample, shape (n, d)
        X0: Null sample, shape (m, d)
    """
    X = as_points(X, "X")
    X0 = as_points(X0, "X0")
    n, m = X.shape[0], X0.shape[0]
    if n < 2 or m < 2:
        raise InvalidParameterError(f"energy statistic needs n, m >= 2, got n={n}, m={m}")
    if X.shape[1] != X0.shape[1]:
        raise DataError(f"Dimension mismatch: {X.shape[1]} vs {X0.shape[1]}")
    cross = cdist(X, X0).mean()
    within_x = cdist(X, X).sum() / (n * (n - 1))
    within_0 = cdist(X0, X0).sum() / (m * (m - 1))
    value = 2.0 * cross - within_x - within_0
    return StatisticValue(
        value=float(value),
        components={
            "cross": float(2.0 * cross),
            "within_sample": float(-within_x),
            "within_null": float(-within_0),
        },
    )


def pooled_distances(X, X0) -> np.ndarray:
    """Negated distance matrix of the pooled sample, for permutation batches."""
    Z = np.vstack([as_points(X, "X"), as_points(X0, "X0")])
    return -cdist(Z, Z)
