"""
Base Regularizer - Abstract base class for spectral filter functions g_lambda.

Design Philosophy:
- Regularizers are stateless and vectorized over x
- Each family declares the constants its thresholds need (C1, C2, C4)
- The constants are checked once per (family, kappa) by a grid scan
- Families are selected by name through the registry
"""

import logging
from abc import ABC, abstractmethod
from typing import Set, Tuple, Union

import numpy as np

from ..config import REGULARIZER
from ..errors import InvalidParameterError, RegularizerConstantError

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]


def check_lambda(lam: float) -> float:
    """Validate a regularization parameter."""
    lam = float(lam)
    if not np.isfinite(lam) or lam <= 0:
        raise InvalidParameterError(f"lambda must be > 0, got {lam}")
    return lam


class BaseRegularizer(ABC):
    """
    Abstract base class for spectral regularizers.

    Subclasses implement `_apply` (g_lambda on x > 0 and at 0), `_ratio`
    ((g_lambda(x) - g_lambda(0)) / x for x above the floor) and
    `derivative_at_zero`.
    """

    FAMILY = "base"
    NAME = "Base Regularizer"
    DESCRIPTION = "Abstract spectral filter"

    # sup x g <= C1, sup lambda g <= C2, inf g (x + lambda) >= C4
    C1 = 1.0
    C2 = 1.0
    C4 = 1.0
    QUALIFICATION = float("inf")

    # (family, kappa) pairs that already passed the constant scan
    _verified: Set[Tuple[str, float]] = set()

    def apply(self, lam: float, x: ArrayLike) -> ArrayLike:
        """
        Evaluate g_lambda(x).

        Args:
            lam: lambda > 0
            x: Nonnegative scalar or array

        Returns:
            g_lambda(x) with the same shape as x
        """
        lam = check_lambda(lam)
        arr = np.asarray(x, dtype=float)
        if np.any(arr < 0):
            raise InvalidParameterError("g_lambda is only defined for x >= 0")
        out = self._apply(lam, arr)
        return float(out) if np.ndim(out) == 0 else out

    def value_at_zero(self, lam: float) -> float:
        """g_lambda(0)."""
        return float(self.apply(lam, 0.0))

    def g_diff_ratio(self, lam: float, x: ArrayLike, kappa: float = 1.0) -> ArrayLike:
        """
        (g_lambda(x) - g_lambda(0)) / x, switching to the analytic limit
        g_lambda'(0) when x < floor * kappa.

        Args:
            lam: lambda > 0
            x: Nonnegative scalar or array (eigenvalues)
            kappa: Kernel bound scaling the switch-over floor
        """
        lam = check_lambda(lam)
        arr = np.asarray(x, dtype=float)
        if np.any(arr < 0):
            raise InvalidParameterError("g_diff_ratio is only defined for x >= 0")
        small = arr < REGULARIZER["limit_floor"] * kappa
        safe = np.where(small, 1.0, arr)
        out = np.where(small, self.derivative_at_zero(lam), self._ratio(lam, safe))
        return float(out) if np.ndim(out) == 0 else out

    @abstractmethod
    def _apply(self, lam: float, x: np.ndarray) -> np.ndarray:
        """g_lambda(x) for validated inputs."""

    @abstractmethod
    def _ratio(self, lam: float, x: np.ndarray) -> np.ndarray:
        """(g_lambda(x) - g_lambda(0)) / x for strictly positive x."""

    @abstractmethod
    def derivative_at_zero(self, lam: float) -> float:
        """g_lambda'(0), the limit of the difference ratio."""

    def verify_constants(self, kappa: float):
        """
        Grid-scan the C1, C2, C4 bounds and monotonicity over [0, kappa].

        Each (family, kappa) pair is scanned once per process.

        Raises:
            RegularizerConstantError: a declared constant does not hold
        """
        key = (self.FAMILY, float(kappa))
        if key in BaseRegularizer._verified:
            return
        tol = REGULARIZER["scan_tol"]
        xs = np.linspace(0.0, kappa, REGULARIZER["scan_points"])
        for lam in REGULARIZER["scan_lambdas"]:
            g = self._apply(lam, xs)
            checks = {
                "sup x g <= C1": np.max(xs * g) <= self.C1 + tol,
                "sup lambda g <= C2": np.max(lam * g) <= self.C2 + tol,
                "inf g (x + lambda) >= C4": np.min(g * (xs + lam)) >= self.C4 - tol,
                "monotone": np.all(np.diff(g) <= tol * max(1.0, g[0])),
            }
            failed = [name for name, ok in checks.items() if not ok]
            if failed:
                raise RegularizerConstantError(
                    f"{self.NAME} fails {', '.join(failed)} at lambda={lam}, kappa={kappa}"
                )
        logger.debug("%s constants verified on [0, %g]", self.NAME, kappa)
        BaseRegularizer._verified.add(key)

    def get_info(self) -> dict:
        """Get regularizer information."""
        return {
            "name": self.NAME,
            "family": self.FAMILY,
            "description": self.DESCRIPTION,
            "C1": self.C1,
            "C2": self.C2,
            "C4": self.C4,
            "qualification": self.QUALIFICATION,
        }

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"
