"""
Distributions on the unit sphere S^(d-1) in R^d.

- sphere_uniform: normalized standard Gaussian draws
- vmf: von Mises-Fisher, C_d(k) exp(k mu^T x), sampled with Wood's
  rejection scheme for mu^T X followed by a Householder rotation
- watson_mixture: equal-weight mixture of Watson laws
  Gamma(d/2) / (2 pi^(d/2) M(1/2, d/2, k)) exp(k (mu^T x)^2),
  sampled by rejection from the uniform sphere with envelope e^k
"""

import numpy as np
from scipy.special import gammaln, hyp1f1, ive

from ..config import DISTRIBUTION
from ..errors import DataError, InvalidParameterError
from .base_distribution import BaseDistribution, rejection_sample

_SPHERE_TOL = 1e-6


def uniform_sphere(count: int, dim: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform points on S^(dim-1)."""
    Z = rng.standard_normal((count, dim))
    return Z / np.linalg.norm(Z, axis=1, keepdims=True)


def sphere_log_area(dim: int) -> float:
    """log of the surface area 2 pi^(d/2) / Gamma(d/2)."""
    return float(np.log(2.0) + 0.5 * dim * np.log(np.pi) - gammaln(0.5 * dim))


def unit_vector(vector, dim: int, name: str = "mu") -> np.ndarray:
    """Normalize a direction, checking its length."""
    v = np.asarray(vector, dtype=float).reshape(-1)
    if v.shape[0] != dim:
        raise InvalidParameterError(f"{name} has {v.shape[0]} entries, expected d={dim}")
    norm = np.linalg.norm(v)
    if norm == 0:
        raise InvalidParameterError(f"{name} must be nonzero")
    return v / norm


def householder_to(mu: np.ndarray) -> np.ndarray:
    """Orthogonal reflection mapping e_1 to mu."""
    e1 = np.zeros_like(mu)
    e1[0] = 1.0
    u = e1 - mu
    norm_sq = float(u @ u)
    if norm_sq < 1e-24:
        return np.eye(mu.shape[0])
    return np.eye(mu.shape[0]) - 2.0 * np.outer(u, u) / norm_sq


def vmf_mean_resultant(dim: int, kappa: float) -> float:
    """E[mu^T X] = I_{d/2}(k) / I_{d/2-1}(k) under vMF(mu, k)."""
    if kappa == 0:
        return 0.0
    return float(ive(dim / 2.0, kappa) / ive(dim / 2.0 - 1.0, kappa))


class _SphereDistribution(BaseDistribution):
    def __init__(self, spec):
        super().__init__(spec)
        if self.dim < 2:
            raise InvalidParameterError(f"{self.FAMILY} needs d >= 2, got {self.dim}")

    def _check_support(self, X):
        if np.any(np.abs(np.linalg.norm(X, axis=1) - 1.0) > _SPHERE_TOL):
            raise DataError("point is not on the unit sphere")


class SphereUniform(_SphereDistribution):
    """Uniform law on S^(d-1)."""

    FAMILY = "sphere_uniform"
    NAME = "Uniform Sphere"
    DESCRIPTION = "Uniform on the unit sphere"

    def _sample(self, count, rng):
        return uniform_sphere(count, self.dim, rng)

    def _density(self, X):
        return np.full(X.shape[0], np.exp(-sphere_log_area(self.dim)))


class VonMisesFisher(_SphereDistribution):
    """von Mises-Fisher law with mean direction mu and concentration kappa."""

    FAMILY = "vmf"
    NAME = "von Mises-Fisher"
    DESCRIPTION = "C_d(k) exp(k mu^T x) on the sphere"
    PARAMETERS = ("kappa", "mu")

    def __init__(self, spec):
        super().__init__(spec)
        self.concentration = float(spec.get("kappa", 0.0))
        if self.concentration < 0:
            raise InvalidParameterError(f"kappa must be >= 0, got {self.concentration}")
        default = np.eye(self.dim)[0]
        self.mu = unit_vector(spec.get("mu", default), self.dim)

    def log_normalizer(self) -> float:
        """log C_d(k) with C_d(k) = k^(d/2-1) / ((2 pi)^(d/2) I_{d/2-1}(k))."""
        k, nu = self.concentration, self.dim / 2.0 - 1.0
        if k == 0:
            return -sphere_log_area(self.dim)
        return float(nu * np.log(k) - 0.5 * self.dim * np.log(2.0 * np.pi) - np.log(ive(nu, k)) - k)

    def _density(self, X):
        return np.exp(self.log_normalizer() + self.concentration * (X @ self.mu))

    def _sample_cosines(self, count, rng) -> np.ndarray:
        # Wood (1994): mu^T X for mu = e_1
        k, d = self.concentration, self.dim
        b = (d - 1.0) / (2.0 * k + np.sqrt(4.0 * k * k + (d - 1.0) ** 2))
        x0 = (1.0 - b) / (1.0 + b)
        c = k * x0 + (d - 1.0) * np.log(1.0 - x0 * x0)
        out = np.empty(0)
        for _ in range(DISTRIBUTION["max_rejection_rounds"]):
            size = max(DISTRIBUTION["rejection_batch"], 2 * (count - out.size))
            z = rng.beta((d - 1.0) / 2.0, (d - 1.0) / 2.0, size=size)
            w = (1.0 - (1.0 + b) * z) / (1.0 - (1.0 - b) * z)
            u = rng.random(size)
            keep = k * w + (d - 1.0) * np.log(1.0 - x0 * w) - c >= np.log(u)
            out = np.concatenate([out, w[keep]])
            if out.size >= count:
                return out[:count]
        raise DataError("vMF sampler did not converge")

    def _sample(self, count, rng):
        w = self._sample_cosines(count, rng)
        tangent = uniform_sphere(count, self.dim - 1, rng) if self.dim > 2 else rng.choice(
            [-1.0, 1.0], size=(count, 1)
        )
        X = np.hstack([w[:, None], np.sqrt(np.clip(1.0 - w * w, 0.0, None))[:, None] * tangent])
        return X @ householder_to(self.mu).T


class WatsonMixture(_SphereDistribution):
    """Mixture of Watson laws sharing one concentration."""

    FAMILY = "watson_mixture"
    NAME = "Watson Mixture"
    DESCRIPTION = "Equal-weight mixture of axial Watson laws"
    PARAMETERS = ("kappa", "mus", "weights")

    def __init__(self, spec):
        super().__init__(spec)
        self.concentration = float(spec.get("kappa", 0.0))
        if self.concentration < 0:
            raise InvalidParameterError(f"kappa must be >= 0, got {self.concentration}")
        first = np.ones(self.dim)
        second = np.ones(self.dim)
        second[0] = -1.0
        mus = spec.get("mus", [first, second])
        self.mus = np.vstack([unit_vector(mu, self.dim, "mus") for mu in mus])
        weights = np.asarray(spec.get("weights", np.ones(len(self.mus))), dtype=float)
        if weights.shape[0] != self.mus.shape[0] or np.any(weights < 0) or weights.sum() <= 0:
            raise InvalidParameterError("weights must be nonnegative, one per mean direction")
        self.weights = weights / weights.sum()

    def log_normalizer(self) -> float:
        """log of Gamma(d/2) / (2 pi^(d/2) M(1/2, d/2, k))."""
        return float(-sphere_log_area(self.dim) - np.log(hyp1f1(0.5, self.dim / 2.0, self.concentration)))

    def _density(self, X):
        cos_sq = (X @ self.mus.T) ** 2
        parts = np.exp(self.log_normalizer() + self.concentration * cos_sq)
        return parts @ self.weights

    def _sample(self, count, rng):
        labels = rng.choice(self.mus.shape[0], size=count, p=self.weights)
        X = np.empty((count, self.dim))
        for index, mu in enumerate(self.mus):
            chosen = np.flatnonzero(labels == index)
            if chosen.size == 0:
                continue
            X[chosen] = rejection_sample(
                chosen.size,
                rng,
                lambda k: uniform_sphere(k, self.dim, rng),
                lambda Z, mu=mu: np.exp(self.concentration * ((Z @ mu) ** 2 - 1.0)),
            )
        return X
