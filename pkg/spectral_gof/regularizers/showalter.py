"""
Showalter Regularizer - g_lambda(x) = (1 - exp(-x / lambda)) / x, g_lambda(0) = 1 / lambda.

Both g and its difference ratio switch to Taylor series for small x / lambda
so the filter stays continuous at zero.
"""

import numpy as np

from ..config import REGULARIZER
from .base_regularizer import BaseRegularizer, check_lambda

# Below this u = x / lambda the difference ratio uses its series
_RATIO_SERIES_CUTOFF = 1e-4


class ShowalterRegularizer(BaseRegularizer):
    """Showalter (asymptotic regularization) filter with C1 = C2 = C4 = 1."""

    FAMILY = "showalter"
    NAME = "Showalter"
    DESCRIPTION = "g(x) = (1 - exp(-x / lambda)) / x"

    def _apply(self, lam: float, x: np.ndarray) -> np.ndarray:
        u = x / lam
        small = u < REGULARIZER["series_cutoff"]
        safe = np.where(small, 1.0, x)
        series = (1.0 - u / 2.0 + u * u / 6.0) / lam
        direct = -np.expm1(-safe / lam) / safe
        return np.where(small, series, direct)

    def _ratio(self, lam: float, x: np.ndarray) -> np.ndarray:
        u = x / lam
        small = u < _RATIO_SERIES_CUTOFF
        safe = np.where(small, 1.0, u)
        series = -0.5 + u / 6.0 - u * u / 24.0
        direct = (-np.expm1(-safe) / safe - 1.0) / safe
        return np.where(small, series, direct) / (lam * lam)

    def derivative_at_zero(self, lam: float) -> float:
        lam = check_lambda(lam)
        return -0.5 / (lam * lam)
