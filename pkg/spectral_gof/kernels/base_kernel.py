"""
Base Kernel - Abstract base class for all positive-definite kernels.

Design Philosophy:
- Kernels are immutable once constructed
- Gram assembly is vectorized in each concrete kernel
- Every kernel reports its bound kappa = sup_x K(x, x)
- Kernels are looked up by family name through the registry
"""

from abc import ABC, abstractmethod
from typing import Any, Dict

import numpy as np

from ..errors import DataError


def as_points(points: Any, name: str = "points") -> np.ndarray:
    """
    Convert a point list to a 2-D float array of shape (count, dim).

    Scalars and 1-D inputs are treated as one-dimensional points.

    Raises:
        DataError: if the list is empty or not finite.
    """
    arr = np.asarray(points, dtype=float)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    elif arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    elif arr.ndim > 2:
        raise DataError(f"{name} must be a list of points, got shape {arr.shape}")
    if arr.shape[0] == 0:
        raise DataError(f"{name} is empty")
    if not np.all(np.isfinite(arr)):
        raise DataError(f"{name} contains non-finite values")
    return arr


class BaseKernel(ABC):
    """
    Abstract base class for reproducing kernels.

    Concrete kernels implement `_gram` on validated 2-D arrays; `evaluate`
    and `gram` handle conversion and dimension checks.
    """

    FAMILY = "base"
    NAME = "Base Kernel"
    DESCRIPTION = "Abstract kernel interface"

    @property
    @abstractmethod
    def bound(self) -> float:
        """kappa: an upper bound on K(x, x) over the domain."""

    @abstractmethod
    def parameters(self) -> Dict[str, Any]:
        """Parameters that identify this kernel within its family."""

    @abstractmethod
    def _gram(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """
        Compute the cross Gram matrix.

        Args:
            A: Validated points, shape (a, d)
            B: Validated points, shape (b, d)

        Returns:
            Matrix of shape (a, b) with entries K(A[i], B[j])
        """

    def _validate(self, A: np.ndarray, B: np.ndarray):
        """Hook for domain checks; the base class only checks dimensions."""
        if A.shape[1] != B.shape[1]:
            raise DataError(
                f"Dimension mismatch: {A.shape[1]} vs {B.shape[1]}"
            )

    @property
    def kernel_id(self) -> str:
        """Stable identifier, e.g. 'gaussian(h=0.5)'."""
        params = ",".join(f"{k}={v:.6g}" if isinstance(v, float) else f"{k}={v}"
                          for k, v in self.parameters().items())
        return f"{self.FAMILY}({params})"

    def evaluate(self, x: Any, y: Any) -> float:
        """
        Evaluate K(x, y) for two single points.

        Args:
            x: Point (scalar or coordinate sequence)
            y: Point with the same dimension as x
        """
        A = as_points(np.atleast_1d(np.asarray(x, dtype=float))[None, :], "x")
        B = as_points(np.atleast_1d(np.asarray(y, dtype=float))[None, :], "y")
        return float(self.gram(A, B)[0, 0])

    def gram(self, A: Any, B: Any) -> np.ndarray:
        """
        Assemble the Gram matrix [K(A[i], B[j])].

        Args:
            A: Point list, shape (a, d) or (a,) for d = 1
            B: Point list with the same dimension

        Returns:
            Matrix of shape (a, b)
        """
        A = as_points(A, "A")
        B = as_points(B, "B")
        self._validate(A, B)
        return self._gram(A, B)

    def get_info(self) -> dict:
        """Get kernel information."""
        return {
            "name": self.NAME,
            "family": self.FAMILY,
            "description": self.DESCRIPTION,
            "parameters": self.parameters(),
            "bound": self.bound,
        }

    def __repr__(self) -> str:
        return self.kernel_id

    def __eq__(self, other) -> bool:
        return isinstance(other, BaseKernel) and self.kernel_id == other.kernel_id

    def __hash__(self) -> int:
        return hash(self.kernel_id)
