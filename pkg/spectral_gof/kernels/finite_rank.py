"""
Finite-Rank Test Kernel - K(x, y) = sum_k lambda_k phi_k(x) phi_k(y).

The phi_k are the real trigonometric basis on [0, 1]:
sqrt(2) cos(2 pi x), sqrt(2) sin(2 pi x), sqrt(2) cos(4 pi x), ...
Because the feature map is explicit, statistics computed through Gram
matrices can be checked against direct feature-space evaluation.
"""

from typing import Any, Dict, Sequence

import numpy as np

from ..errors import DataError, InvalidParameterError
from .base_kernel import BaseKernel


def trig_basis(x: np.ndarray, count: int) -> np.ndarray:
    """
    Evaluate the first `count` real trigonometric basis functions.

    Args:
        x: Scalar points, shape (n,)
        count: Number of basis functions

    Returns:
        Matrix of shape (n, count)
    """
    x = np.asarray(x, dtype=float).reshape(-1)
    cols = np.empty((x.shape[0], count))
    for j in range(count):
        freq = j // 2 + 1
        arg = 2.0 * np.pi * freq * x
        cols[:, j] = np.sqrt(2.0) * (np.cos(arg) if j % 2 == 0 else np.sin(arg))
    return cols


class FiniteRankKernel(BaseKernel):
    """Kernel with an explicit, user-supplied eigen-expansion."""

    FAMILY = "finite_rank_test"
    NAME = "Finite Rank"
    DESCRIPTION = "Explicit eigenpair kernel used as a feature-space oracle"

    def __init__(self, eigenvalues: Sequence[float] = (0.5, 0.25, 0.125, 0.0625, 0.03125)):
        """
        Args:
            eigenvalues: Positive eigenvalues lambda_k, one per basis function
        """
        values = np.asarray(eigenvalues, dtype=float).reshape(-1)
        if values.size == 0 or np.any(values <= 0) or not np.all(np.isfinite(values)):
            raise InvalidParameterError("eigenvalues must be a nonempty list of positive reals")
        values.setflags(write=False)
        self._eigenvalues = values

    @property
    def eigenvalues(self) -> np.ndarray:
        return self._eigenvalues

    @property
    def rank(self) -> int:
        return int(self._eigenvalues.size)

    @property
    def bound(self) -> float:
        # phi_k^2 <= 2 for the trigonometric basis
        return float(2.0 * self._eigenvalues.sum())

    def parameters(self) -> Dict[str, Any]:
        return {"rank": self.rank, "trace": float(self._eigenvalues.sum())}

    def _validate(self, A: np.ndarray, B: np.ndarray):
        super()._validate(A, B)
        if A.shape[1] != 1:
            raise DataError("finite rank kernel requires scalar inputs")

    def features(self, A: Any) -> np.ndarray:
        """Feature map psi(x) = sqrt(lambda) * phi(x), shape (n, rank)."""
        A = np.asarray(A, dtype=float).reshape(-1)
        return trig_basis(A, self.rank) * np.sqrt(self._eigenvalues)[None, :]

    def _gram(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        phi_a = trig_basis(A[:, 0], self.rank)
        phi_b = trig_basis(B[:, 0], self.rank)
        # Term-by-term accumulation keeps gram(A, B) == gram(B, A).T exactly.
        out = np.zeros((A.shape[0], B.shape[0]))
        for k, lam in enumerate(self._eigenvalues):
            out += lam * np.multiply.outer(phi_a[:, k], phi_b[:, k])
        return out

    def mercer(self):
        """Mercer system matching this kernel's eigen-expansion."""
        from ..spectral.mercer import FiniteRankMercer

        return FiniteRankMercer(self._eigenvalues)
