"""
Gaussian Kernel - K(x, y) = exp(-|x - y|^2 / (2h)).

The bandwidth h enters as a variance, so the median heuristic (a median of
squared distances) plugs in directly.
"""

from typing import Any, Dict

import numpy as np
from scipy.spatial.distance import cdist

from ..config import KERNEL
from ..errors import InvalidParameterError
from .base_kernel import BaseKernel


class GaussianKernel(BaseKernel):
    """Gaussian RBF kernel on R^d with kappa = 1."""

    FAMILY = "gaussian"
    NAME = "Gaussian"
    DESCRIPTION = "exp(-|x-y|^2 / (2h)) with bandwidth h > 0"

    def __init__(self, bandwidth: float = KERNEL["gaussian_bandwidth"]):
        """
        Args:
            bandwidth: h > 0
        """
        bandwidth = float(bandwidth)
        if not np.isfinite(bandwidth) or bandwidth <= 0:
            raise InvalidParameterError(f"bandwidth must be > 0, got {bandwidth}")
        self._bandwidth = bandwidth

    @property
    def bandwidth(self) -> float:
        return self._bandwidth

    @property
    def bound(self) -> float:
        return 1.0

    def parameters(self) -> Dict[str, Any]:
        return {"h": self._bandwidth}

    def _gram(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        sq = cdist(A, B, "sqeuclidean")
        return np.exp(-sq / (2.0 * self._bandwidth))
