"""
MMD goodness-of-fit statistic and closed-form null mean embeddings.

The one-sample MMD statistic needs mu0 = E_{P0} K(., Y) at the sample
points and ||mu0||^2. Both are available in closed form for the
(kernel, null) pairs below; other pairs raise MissingClosedFormError.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.special import gammaln, ive, ndtr

from ..distributions import DistributionSpec, get_distribution, parse_spec
from ..errors import InvalidParameterError, MissingClosedFormError
from ..kernels import BaseKernel, FiniteRankKernel, GaussianKernel, PeriodicSplineKernel
from ..kernels.base_kernel import as_points
from ..spectral import MercerSystem
from .value import StatisticValue

logger = logging.getLogger(__name__)


def mmd_hat(
    K_n: np.ndarray,
    mu0_at_X: np.ndarray,
    mu0_norm_sq: float,
    n: Optional[int] = None,
    kernel_id: str = "",
) -> StatisticValue:
    """
    Unbiased estimate of D^2_MMD(P, P0).

    (1/(n(n-1))) sum_{i != j} K(X_i, X_j) - (2/n) sum_i mu0(X_i) + ||mu0||^2

    Args:
        K_n: Gram matrix of the sample, shape (n, n)
        mu0_at_X: mu0 evaluated at the sample, shape (n,)
        mu0_norm_sq: ||mu0||^2
        n: Optional sample size, checked against K_n
    """
    K_n = np.asarray(K_n, dtype=float)
    mu0_at_X = np.asarray(mu0_at_X, dtype=float).reshape(-1)
    size = K_n.shape[0]
    if n is not None and n != size:
        raise InvalidParameterError(f"n={n} does not match K_n ({size})")
    if size < 2:
        raise InvalidParameterError(f"MMD U-statistic needs n >= 2, got {size}")
    if mu0_at_X.shape[0] != size:
        raise InvalidParameterError("mu0_at_X length does not match K_n")
    pair_mean = (K_n.sum() - np.trace(K_n)) / (size * (size - 1))
    embedding_mean = float(np.mean(mu0_at_X))
    value = pair_mean - 2.0 * embedding_mean + float(mu0_norm_sq)
    return StatisticValue(
        value=float(value),
        kernel_id=kernel_id,
        components={
            "pair_mean": float(pair_mean),
            "embedding_term": -2.0 * embedding_mean,
            "norm_sq": float(mu0_norm_sq),
        },
    )


@dataclass(frozen=True)
class ClosedFormNull:
    """
    Null quantities of one (kernel, P0) pair.

    Attributes:
        mean_embedding: x -> mu0(x) for points of shape (n, d)
        squared_norm: ||mu0||^2 in the RKHS
        spectrum: Mercer system of the kernel under P0, when known
        description: Human-readable label
    """

    mean_embedding: Callable[[np.ndarray], np.ndarray]
    squared_norm: float
    spectrum: Optional[MercerSystem] = None
    description: str = ""

    def __call__(self, X) -> np.ndarray:
        return self.mean_embedding(as_points(X, "X"))


def _gaussian_gaussian(h: float, mean: np.ndarray, variance: float) -> ClosedFormNull:
    d = mean.shape[0]
    coef = (h / (h + variance)) ** (d / 2.0)

    def embedding(X: np.ndarray) -> np.ndarray:
        sq = np.sum((X - mean[None, :]) ** 2, axis=1)
        return coef * np.exp(-sq / (2.0 * (h + variance)))

    return ClosedFormNull(
        mean_embedding=embedding,
        squared_norm=float((h / (h + 2.0 * variance)) ** (d / 2.0)),
        description=f"gaussian kernel h={h:g}, N(m, {variance:g} I_{d})",
    )


def _gaussian_cube(h: float, d: int) -> ClosedFormNull:
    root = np.sqrt(h)
    scale = np.sqrt(2.0 * np.pi * h)

    def embedding(X: np.ndarray) -> np.ndarray:
        per_coord = scale * (ndtr((1.0 - X) / root) - ndtr(-X / root))
        return np.prod(per_coord, axis=1)

    # integral over [0,1]^2 of exp(-(x-y)^2 / 2h), one coordinate
    one = 2.0 * (scale * (ndtr(1.0 / root) - 0.5) - h * (-np.expm1(-1.0 / (2.0 * h))))
    return ClosedFormNull(
        mean_embedding=embedding,
        squared_norm=float(one ** d),
        description=f"gaussian kernel h={h:g}, uniform [0,1]^{d}",
    )


def _gaussian_sphere(h: float, d: int) -> ClosedFormNull:
    nu = d / 2.0 - 1.0
    t = 1.0 / h
    # E exp((x^T y - 1) / h) over the sphere; the same for every x on it
    value = float(np.exp(gammaln(nu + 1.0) + nu * np.log(2.0 / t)) * ive(nu, t))

    def embedding(X: np.ndarray) -> np.ndarray:
        return np.full(X.shape[0], value)

    return ClosedFormNull(
        mean_embedding=embedding,
        squared_norm=value,
        description=f"gaussian kernel h={h:g}, uniform S^{d - 1}",
    )


def _centered_null(kernel: BaseKernel, label: str) -> ClosedFormNull:
    def embedding(X: np.ndarray) -> np.ndarray:
        return np.zeros(X.shape[0])

    return ClosedFormNull(
        mean_embedding=embedding,
        squared_norm=0.0,
        spectrum=kernel.mercer(),
        description=label,
    )


def closed_form_null(kernel: BaseKernel, spec: DistributionSpec) -> ClosedFormNull:
    """
    Closed-form mean embedding of P0 for a kernel.

    Supported pairs:
        gaussian kernel x gaussian, uniform_cube, sphere_uniform
        periodic_spline / finite_rank_test kernel x uniform on [0, 1]

    Raises:
        MissingClosedFormError: the pair has no closed form here
    """
    if isinstance(spec, str):
        spec = parse_spec(spec)
    dist = get_distribution(spec)
    if isinstance(kernel, GaussianKernel):
        h = kernel.bandwidth
        if dist.is_uniform_cube:
            return _gaussian_cube(h, dist.dim)
        if spec.family == "gaussian":
            return _gaussian_gaussian(h, dist.mean, dist.variance)
        if spec.family == "sphere_uniform" or (spec.family == "vmf" and dist.concentration == 0):
            return _gaussian_sphere(h, dist.dim)
    elif isinstance(kernel, (PeriodicSplineKernel, FiniteRankKernel)):
        if dist.is_uniform_cube and dist.dim == 1:
            return _centered_null(kernel, f"{kernel.kernel_id}, uniform [0,1]")
    raise MissingClosedFormError(
        f"no closed-form mean embedding for {kernel.kernel_id} under {spec}"
    )
