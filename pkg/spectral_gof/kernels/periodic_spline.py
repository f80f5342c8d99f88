"""
Periodic Spline Kernel - K(x, y) = ((-1)^(r-1) / (2r)!) B_2r([x - y]) on [0, 1].

Only r = 1 is implemented: K(x, y) = B_2([x - y]) / 2 with
B_2(t) = t^2 - t + 1/6. Its Mercer expansion is
sum_{k != 0} (2 pi k)^(-2) exp(2 pi i k (x - y)), so the null mean
embedding under the uniform distribution is identically zero.
"""

from typing import Any, Dict

import numpy as np

from ..config import KERNEL
from ..errors import DataError, InvalidParameterError
from .base_kernel import BaseKernel


def bernoulli_b2(t: np.ndarray) -> np.ndarray:
    """Second Bernoulli polynomial t^2 - t + 1/6."""
    return t * t - t + 1.0 / 6.0


def fractional_part(t: np.ndarray) -> np.ndarray:
    """[t] = t - floor(t), valid for negative t."""
    return t - np.floor(t)


class PeriodicSplineKernel(BaseKernel):
    """Periodic spline kernel of order r = 1 on the unit interval."""

    FAMILY = "periodic_spline"
    NAME = "Periodic Spline"
    DESCRIPTION = "Bernoulli-polynomial periodic spline kernel on [0, 1]"

    def __init__(self, order: int = KERNEL["spline_order"]):
        """
        Args:
            order: Spline order r (only 1 is supported)
        """
        if int(order) != 1:
            raise InvalidParameterError(f"only order r=1 is supported, got {order}")
        self._order = 1

    @property
    def order(self) -> int:
        return self._order

    @property
    def bound(self) -> float:
        return 1.0 / 12.0

    def parameters(self) -> Dict[str, Any]:
        return {"r": self._order}

    def _validate(self, A: np.ndarray, B: np.ndarray):
        super()._validate(A, B)
        if A.shape[1] != 1:
            raise DataError("periodic spline kernel requires scalar inputs")
        for arr in (A, B):
            if np.any(arr < 0.0) or np.any(arr > 1.0):
                raise DataError("periodic spline kernel inputs must lie in [0, 1]")

    def _gram(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        # |x - y| is exactly antisymmetric in floating point, so gram(A, B)
        # is the exact transpose of gram(B, A); B_2 is symmetric about 1/2.
        t = np.abs(A[:, 0][:, None] - B[:, 0][None, :])
        return 0.5 * bernoulli_b2(fractional_part(t))

    def mercer(self):
        """Closed-form Mercer system of this kernel under the uniform law."""
        from ..spectral.mercer import PeriodicSplineMercer

        return PeriodicSplineMercer(order=self._order)
