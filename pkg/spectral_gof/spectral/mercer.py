"""
Mercer Systems - Kernels with a closed-form eigen-expansion.

A Mercer system lists the eigenvalues of the covariance operator under the
null in descending order together with the real feature functions they
belong to. The oracle statistic and the population degrees of freedom are
computed from it directly.
"""

from abc import ABC, abstractmethod
from typing import Sequence

import numpy as np

from ..config import ORACLE
from ..errors import DataError, InvalidParameterError
from ..kernels.finite_rank import trig_basis
from .eigensystem import SpectralSummary, shrinkage_ratios


class MercerSystem(ABC):
    """
    Abstract eigen-expansion K(x, y) = sum_j lambda_j phi_j(x) phi_j(y).

    The phi_j are orthonormal in L2(P0) and centered under P0, so the
    lambda_j are also the eigenvalues of the centered covariance operator.
    """

    NAME = "Mercer System"

    @property
    @abstractmethod
    def kappa(self) -> float:
        """Bound of the underlying kernel."""

    @property
    def size(self) -> float:
        """Number of eigenpairs (inf for infinite expansions)."""
        return float("inf")

    @abstractmethod
    def eigenvalues(self, count: int) -> np.ndarray:
        """First `count` eigenvalues in descending order."""

    @abstractmethod
    def features(self, x: np.ndarray, count: int) -> np.ndarray:
        """First `count` eigenfunctions at points x, shape (n, count)."""

    def tail_mass(self, count: int) -> float:
        """Upper bound on the eigenvalue mass beyond the first `count`."""
        return 0.0

    def _check_points(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.ndim == 2:
            if x.shape[1] != 1:
                raise DataError(f"{self.NAME} expects scalar points")
            x = x[:, 0]
        x = x.reshape(-1)
        if np.any((x < 0) | (x > 1)):
            raise DataError(f"{self.NAME} is defined on [0, 1]")
        return x


class PeriodicSplineMercer(MercerSystem):
    """
    Spectrum of the periodic spline kernel under the uniform law on [0, 1].

    Frequencies k = 1, 2, ... each carry the pair sqrt(2) cos(2 pi k x),
    sqrt(2) sin(2 pi k x) with eigenvalue (2 pi k)^(-2r).
    """

    NAME = "Periodic Spline"

    def __init__(self, order: int = 1):
        if int(order) != 1:
            raise InvalidParameterError(f"only spline order r=1 is supported, got {order}")
        self.order = 1

    @property
    def kappa(self) -> float:
        return 1.0 / 12.0

    def eigenvalues(self, count: int) -> np.ndarray:
        freq = np.arange(count) // 2 + 1
        return (2.0 * np.pi * freq) ** (-2.0 * self.order)

    def features(self, x, count: int) -> np.ndarray:
        return trig_basis(self._check_points(x), count)

    def tail_mass(self, count: int) -> float:
        # sum over k > K of 2 (2 pi k)^-2 < 2 / (4 pi^2 K)
        k_full = count // 2
        if k_full == 0:
            return self.kappa
        return 2.0 / (4.0 * np.pi ** 2 * k_full)


class FiniteRankMercer(MercerSystem):
    """Finite expansion with explicit eigenvalues on the trigonometric basis."""

    NAME = "Finite Rank"

    def __init__(self, eigenvalues: Sequence[float]):
        values = np.asarray(eigenvalues, dtype=float).reshape(-1)
        if values.size == 0 or np.any(values <= 0):
            raise InvalidParameterError("eigenvalues must be a nonempty list of positive reals")
        self._values = values

    @property
    def kappa(self) -> float:
        return float(2.0 * self._values.sum())

    @property
    def size(self) -> float:
        return float(self._values.size)

    def eigenvalues(self, count: int) -> np.ndarray:
        # Feature order is fixed by the kernel, so values are kept in basis order.
        return self._values[: min(count, self._values.size)]

    def features(self, x, count: int) -> np.ndarray:
        count = min(count, self._values.size)
        return trig_basis(self._check_points(x), count)


def population_summary(
    system: MercerSystem,
    lam: float,
    truncation: int = ORACLE["population_truncation"],
) -> SpectralSummary:
    """
    Population N1(lambda), N2(lambda) from a closed-form spectrum.

    Args:
        system: Mercer system of the kernel under P0
        lam: lambda > 0
        truncation: Number of frequencies kept (two eigenvalues per frequency
            for trigonometric systems)
    """
    count = int(min(2 * truncation, system.size))
    ratios = shrinkage_ratios(system.eigenvalues(count), lam)
    return SpectralSummary(
        n1_hat=float(np.sum(ratios)),
        n2_hat=float(np.sqrt(np.sum(ratios ** 2))),
        lam=float(lam),
    )
