"""
Distributions on the unit cube [0, 1]^d.

The perturbed uniform law adds a grid of signed smooth bumps:
    p(x) = 1 + theta * prod_j G(frac(P x_j))
with the dipole G(t) = phi(4t - 1) on (0, 1/2) and -phi(4t - 3) on (1/2, 1),
phi(u) = exp(-1 / (1 - u^2)). Each bump integrates to zero, so p is
normalized for every P and theta. P = 0 is the uniform law.
"""

import numpy as np

from ..config import DISTRIBUTION
from ..errors import DataError, InvalidParameterError
from .base_distribution import BaseDistribution, rejection_sample


def _smooth_bump(u: np.ndarray) -> np.ndarray:
    inside = np.abs(u) < 1.0
    safe = np.where(inside, u, 0.0)
    return np.where(inside, np.exp(-1.0 / (1.0 - safe ** 2)), 0.0)


def dipole_bump(t: np.ndarray) -> np.ndarray:
    """Signed bump on (0, 1) with zero integral and max |G| = e^-1."""
    t = np.asarray(t, dtype=float)
    left = (t > 0.0) & (t < 0.5)
    right = (t > 0.5) & (t < 1.0)
    return np.where(left, _smooth_bump(4.0 * t - 1.0), 0.0) - np.where(
        right, _smooth_bump(4.0 * t - 3.0), 0.0
    )


class UniformCube(BaseDistribution):
    """Uniform law on [0, 1]^d."""

    FAMILY = "uniform_cube"
    NAME = "Uniform Cube"
    DESCRIPTION = "Uniform on [0, 1]^d"

    @property
    def is_uniform_cube(self) -> bool:
        return True

    def _sample(self, count, rng):
        return rng.random((count, self.dim))

    def _density(self, X):
        return np.ones(X.shape[0])

    def _check_support(self, X):
        if np.any((X < 0.0) | (X > 1.0)):
            raise DataError("point outside [0, 1]^d")


class PerturbedUniform(UniformCube):
    """Uniform law plus P^d signed bumps of amplitude theta."""

    FAMILY = "perturbed_uniform"
    NAME = "Perturbed Uniform"
    DESCRIPTION = "1 + theta * sum of dipole bumps on a P^d grid"
    PARAMETERS = ("P", "amplitude")

    def __init__(self, spec):
        super().__init__(spec)
        self.P = int(spec.get("P", 0))
        if self.P < 0:
            raise InvalidParameterError(f"P must be >= 0, got {self.P}")
        amplitude = float(spec.get("amplitude", DISTRIBUTION["perturbation_amplitude"]))
        if amplitude < 0:
            raise InvalidParameterError(f"amplitude must be >= 0, got {amplitude}")
        theta = amplitude * self.P ** (-self.dim / 2.0) if self.P else 0.0
        # min density is 1 - theta e^-d
        limit = (1.0 - DISTRIBUTION["min_density"]) * np.exp(self.dim)
        self.theta = float(min(theta, limit))

    @property
    def is_uniform_cube(self) -> bool:
        return self.P == 0 or self.theta == 0.0

    def _perturbation(self, X: np.ndarray) -> np.ndarray:
        scaled = self.P * X
        return np.prod(dipole_bump(scaled - np.floor(scaled)), axis=1)

    def _density(self, X):
        if self.is_uniform_cube:
            return np.ones(X.shape[0])
        return 1.0 + self.theta * self._perturbation(X)

    def _sample(self, count, rng):
        if self.is_uniform_cube:
            return rng.random((count, self.dim))
        envelope = 1.0 + self.theta * np.exp(-self.dim)
        return rejection_sample(
            count,
            rng,
            lambda k: rng.random((k, self.dim)),
            lambda Z: self._density(Z) / envelope,
        )
