"""
Tikhonov Regularizer - g_lambda(x) = 1 / (x + lambda).

The difference ratio has the closed form -1 / (lambda (x + lambda)),
which is exact at every x including the zero limit -1 / lambda^2.
"""

import numpy as np

from .base_regularizer import BaseRegularizer, check_lambda


class TikhonovRegularizer(BaseRegularizer):
    """Tikhonov (ridge) filter with C1 = C2 = C4 = 1."""

    FAMILY = "tikhonov"
    NAME = "Tikhonov"
    DESCRIPTION = "g(x) = 1 / (x + lambda)"

    def _apply(self, lam: float, x: np.ndarray) -> np.ndarray:
        return 1.0 / (x + lam)

    def _ratio(self, lam: float, x: np.ndarray) -> np.ndarray:
        return -1.0 / (lam * (x + lam))

    def derivative_at_zero(self, lam: float) -> float:
        lam = check_lambda(lam)
        return -1.0 / (lam * lam)
