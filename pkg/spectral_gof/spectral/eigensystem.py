"""
Eigensystem of the centered covariance Gram matrix.

The covariance sample Y0 (size s) enters every statistic only through
M = (1/s) Ht^(1/2) K_s Ht^(1/2), where Ht^(1/2) = sqrt(s/(s-1)) H_s and H_s
is the centering projection. Its eigendecomposition is computed once and
reused across lambda, permutations and repetitions that share Y0.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..config import SPECTRAL
from ..errors import DataError, InvalidParameterError, SpectralAssemblyError
from ..regularizers import BaseRegularizer, check_lambda

logger = logging.getLogger(__name__)


def double_center(K: np.ndarray) -> np.ndarray:
    """H K H for a square matrix K, without forming H."""
    row = K.mean(axis=1, keepdims=True)
    col = K.mean(axis=0, keepdims=True)
    return K - row - col + K.mean()


@dataclass(frozen=True)
class EigenSystem:
    """
    Eigenpairs of (1/s) Ht^(1/2) K_s Ht^(1/2).

    Attributes:
        eigenvalues: Descending, nonnegative, shape (s,)
        eigenvectors: Orthonormal columns matching eigenvalues, shape (s, s)
        sample_count: s
        kappa: Kernel bound used for the clamp and ratio floors
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sample_count: int
    kappa: float = 1.0

    def reconstruct(self) -> np.ndarray:
        """sum_i lambda_i alpha_i alpha_i^T."""
        V = self.eigenvectors
        return (V * self.eigenvalues[None, :]) @ V.T

    def centered_eigenvectors(self) -> np.ndarray:
        """H_s V; the constant direction drops out of every statistic."""
        V = self.eigenvectors
        return V - V.mean(axis=0, keepdims=True)


def centered_eigensystem(K_s: np.ndarray, kappa: Optional[float] = None) -> EigenSystem:
    """
    Eigendecompose (1/s) Ht^(1/2) K_s Ht^(1/2) = (1/(s-1)) H_s K_s H_s.

    Args:
        K_s: Symmetric Gram matrix of the covariance sample, shape (s, s)
        kappa: Kernel bound; defaults to the largest diagonal entry of K_s

    Raises:
        InvalidParameterError: s < 2
        DataError: K_s is not square or not symmetric
        SpectralAssemblyError: an eigenvalue is below -clamp_tol * kappa
    """
    K_s = np.asarray(K_s, dtype=float)
    if K_s.ndim != 2 or K_s.shape[0] != K_s.shape[1]:
        raise DataError(f"K_s must be square, got shape {K_s.shape}")
    s = K_s.shape[0]
    if s < 2:
        raise InvalidParameterError(f"covariance sample needs s >= 2, got {s}")
    scale = float(np.max(np.abs(K_s)))
    if np.max(np.abs(K_s - K_s.T)) > SPECTRAL["symmetry_tol"] * max(1.0, scale):
        raise DataError("K_s is not symmetric")
    if kappa is None:
        kappa = float(np.max(np.diag(K_s)))
    kappa = kappa if kappa > 0 else 1.0

    M = double_center(K_s) / (s - 1)
    M = 0.5 * (M + M.T)
    values, vectors = np.linalg.eigh(M)
    order = np.argsort(values)[::-1]
    values = values[order]
    vectors = vectors[:, order]

    floor = -SPECTRAL["clamp_tol"] * kappa
    if values[-1] < floor:
        raise SpectralAssemblyError(
            f"centered Gram has eigenvalue {values[-1]:.3e} below {floor:.3e}"
        )
    negatives = int(np.sum(values < 0))
    if negatives:
        logger.debug("Clamped %d round-off negative eigenvalues to zero", negatives)
        values = np.where(values < 0, 0.0, values)

    values.setflags(write=False)
    vectors.setflags(write=False)
    return EigenSystem(eigenvalues=values, eigenvectors=vectors, sample_count=s, kappa=kappa)


def build_G(eigen: EigenSystem, reg: BaseRegularizer, lam: float) -> np.ndarray:
    """
    G = sum_i ((g(lambda_i) - g(0)) / lambda_i) alpha_i alpha_i^T.

    Args:
        eigen: Centered eigensystem
        reg: Spectral regularizer
        lam: lambda > 0
    """
    lam = check_lambda(lam)
    ratio = np.asarray(reg.g_diff_ratio(lam, eigen.eigenvalues, eigen.kappa))
    V = eigen.eigenvectors
    G = (V * ratio[None, :]) @ V.T
    return 0.5 * (G + G.T)


def regularized_operator(eigen: EigenSystem, reg: BaseRegularizer, lam: float) -> np.ndarray:
    """
    C = (1/s) Ht^(1/2) G Ht^(1/2) = (1/(s-1)) H G H.

    This is the s x s matrix sandwiched between K_ns and K_ns^T in the
    two-sample statistic.
    """
    lam = check_lambda(lam)
    ratio = np.asarray(reg.g_diff_ratio(lam, eigen.eigenvalues, eigen.kappa))
    HV = eigen.centered_eigenvectors()
    C = (HV * ratio[None, :]) @ HV.T / (eigen.sample_count - 1)
    return 0.5 * (C + C.T)


def shrinkage_ratios(values: np.ndarray, lam: float) -> np.ndarray:
    """lambda_i / (lambda_i + lambda) per eigenvalue."""
    lam = check_lambda(lam)
    return values / (values + lam)


def n1_hat(eigen: EigenSystem, lam: float) -> float:
    """Empirical N1(lambda) = sum_i lambda_i / (lambda_i + lambda)."""
    return float(np.sum(shrinkage_ratios(eigen.eigenvalues, lam)))


def n2_hat(eigen: EigenSystem, lam: float) -> float:
    """Empirical N2(lambda) = sqrt(sum_i (lambda_i / (lambda_i + lambda))^2)."""
    return float(np.sqrt(np.sum(shrinkage_ratios(eigen.eigenvalues, lam) ** 2)))


@dataclass(frozen=True)
class SpectralSummary:
    """Degrees-of-freedom functionals at one lambda."""

    n1_hat: float
    n2_hat: float
    lam: float


def summarize(eigen: EigenSystem, lam: float) -> SpectralSummary:
    """N1 and N2 of an empirical eigensystem at lambda."""
    return SpectralSummary(n1_hat=n1_hat(eigen, lam), n2_hat=n2_hat(eigen, lam), lam=float(lam))
