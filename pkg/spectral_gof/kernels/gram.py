"""
Gram assembly and bandwidth heuristics.

GramBundle holds every block the two-sample statistic needs for one kernel:
sample (X), null mean sample (X0) and covariance sample (Y0).
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, List

import numpy as np
from scipy.spatial.distance import pdist

from ..config import GRID, KERNEL
from ..errors import DataError, DegenerateBandwidthError, InvalidParameterError
from .base_kernel import BaseKernel, as_points

logger = logging.getLogger(__name__)


def gram(kernel: BaseKernel, A: Any, B: Any) -> np.ndarray:
    """Gram matrix [K(A[i], B[j])]; see BaseKernel.gram."""
    return kernel.gram(A, B)


@dataclass(frozen=True)
class GramBundle:
    """
    All Gram blocks for one kernel.

    Attributes:
        K_n: X-X block (n x n)
        K_m: X0-X0 block (m x m)
        K_mn: X0-X block (m x n)
        K_ns: X-Y0 block (n x s)
        K_ms: X0-Y0 block (m x s)
        K_s: Y0-Y0 block (s x s)
    """

    K_n: np.ndarray
    K_m: np.ndarray
    K_mn: np.ndarray
    K_ns: np.ndarray
    K_ms: np.ndarray
    K_s: np.ndarray

    def __post_init__(self):
        n, m, s = self.K_n.shape[0], self.K_m.shape[0], self.K_s.shape[0]
        expected = {
            "K_n": (n, n),
            "K_m": (m, m),
            "K_mn": (m, n),
            "K_ns": (n, s),
            "K_ms": (m, s),
            "K_s": (s, s),
        }
        for name, shape in expected.items():
            if getattr(self, name).shape != shape:
                raise DataError(
                    f"{name} has shape {getattr(self, name).shape}, expected {shape}"
                )

    @property
    def n(self) -> int:
        return self.K_n.shape[0]

    @property
    def m(self) -> int:
        return self.K_m.shape[0]

    @property
    def s(self) -> int:
        return self.K_s.shape[0]

    @classmethod
    def build(cls, kernel: BaseKernel, X: Any, X0: Any, Y0: Any) -> "GramBundle":
        """
        Assemble all blocks from the three samples.

        Args:
            kernel: Kernel to evaluate
            X: Sample from P, (n, d)
            X0: Null sample for the mean embedding, (m, d)
            Y0: Null sample for the covariance operator, (s, d)
        """
        X = as_points(X, "X")
        X0 = as_points(X0, "X0")
        Y0 = as_points(Y0, "Y0")
        return cls(
            K_n=kernel.gram(X, X),
            K_m=kernel.gram(X0, X0),
            K_mn=kernel.gram(X0, X),
            K_ns=kernel.gram(X, Y0),
            K_ms=kernel.gram(X0, Y0),
            K_s=kernel.gram(Y0, Y0),
        )

    def permuted(self, order: np.ndarray) -> "GramBundle":
        """
        Re-slice the bundle for a reordering of the pooled (X, X0) sample.

        Args:
            order: Permutation of range(n + m); the first n entries become X
        """
        n = self.n
        pooled = np.block([[self.K_n, self.K_mn.T], [self.K_mn, self.K_m]])
        pooled_s = np.vstack([self.K_ns, self.K_ms])
        order = np.asarray(order)
        ia, ib = order[:n], order[n:]
        return GramBundle(
            K_n=pooled[np.ix_(ia, ia)],
            K_m=pooled[np.ix_(ib, ib)],
            K_mn=pooled[np.ix_(ib, ia)],
            K_ns=pooled_s[ia],
            K_ms=pooled_s[ib],
            K_s=self.K_s,
        )

    def is_symmetric(self, tol: float = KERNEL["symmetry_tol"]) -> bool:
        """Check the square blocks are symmetric within tol."""
        return all(
            np.max(np.abs(K - K.T), initial=0.0) <= tol
            for K in (self.K_n, self.K_m, self.K_s)
        )


def median_heuristic(X: Any, X0: Any) -> float:
    """
    Median of squared Euclidean distances over distinct pairs of X u X0.

    Raises:
        InvalidParameterError: fewer than two pooled points
        DegenerateBandwidthError: the median is zero
    """
    X = as_points(X, "X")
    X0 = as_points(X0, "X0")
    if X.shape[1] != X0.shape[1]:
        raise DataError(f"Dimension mismatch: {X.shape[1]} vs {X0.shape[1]}")
    pooled = np.vstack([X, X0])
    if pooled.shape[0] < 2:
        raise InvalidParameterError("median heuristic needs at least two points")
    h = float(np.median(pdist(pooled, "sqeuclidean")))
    if h <= 0.0:
        raise DegenerateBandwidthError(
            "median squared distance is zero; the pooled sample is degenerate"
        )
    return h


def doubling_grid(lower: float, upper: float) -> List[float]:
    """
    Geometric grid {lower * 2^i} up to the last element <= upper.

    Args:
        lower: First grid point, > 0
        upper: Upper end, >= lower
    """
    if not (lower > 0 and upper >= lower and math.isfinite(upper)):
        raise InvalidParameterError(
            f"grid needs 0 < lower <= upper, got lower={lower}, upper={upper}"
        )
    limit = upper * (1.0 + GRID["relative_tol"])
    grid = [float(lower)]
    while grid[-1] * 2.0 <= limit:
        grid.append(grid[-1] * 2.0)
    return grid


def bandwidth_grid(h_median: float, w_lower: float, w_upper: float) -> List[float]:
    """
    Bandwidth grid {w_L h_m, 2 w_L h_m, ..., <= w_U h_m}.

    Args:
        h_median: Median heuristic value
        w_lower: w_L > 0
        w_upper: w_U >= w_L
    """
    if not (h_median > 0):
        raise InvalidParameterError(f"h_median must be > 0, got {h_median}")
    if not (0 < w_lower <= w_upper):
        raise InvalidParameterError(
            f"bandwidth multipliers need 0 < w_L <= w_U, got {w_lower}, {w_upper}"
        )
    return doubling_grid(w_lower * h_median, w_upper * h_median)


def lambda_grid(lambda_lower: float, lambda_upper: float) -> List[float]:
    """Regularization grid {lambda_L, 2 lambda_L, ..., <= lambda_U}."""
    return doubling_grid(lambda_lower, lambda_upper)
