"""
Gaussian Distribution - N(shift, scale * I_d).

A scalar shift moves the first coordinate only; a vector shift must have
length d.
"""

import numpy as np

from ..errors import InvalidParameterError
from .base_distribution import BaseDistribution


class GaussianDistribution(BaseDistribution):
    """Isotropic Gaussian with mean shift and variance scale."""

    FAMILY = "gaussian"
    NAME = "Gaussian"
    DESCRIPTION = "N(shift, scale * I_d)"
    PARAMETERS = ("shift", "scale")

    def __init__(self, spec):
        super().__init__(spec)
        shift = spec.get("shift", 0.0)
        mean = np.zeros(self.dim)
        if np.ndim(shift) == 0:
            mean[0] = float(shift)
        else:
            shift = np.asarray(shift, dtype=float).reshape(-1)
            if shift.shape[0] != self.dim:
                raise InvalidParameterError(
                    f"shift has {shift.shape[0]} entries, expected d={self.dim}"
                )
            mean = shift
        self.mean = mean
        self.variance = float(spec.get("scale", 1.0))
        if not self.variance > 0:
            raise InvalidParameterError(f"scale must be > 0, got {self.variance}")

    def _sample(self, count, rng):
        return self.mean[None, :] + np.sqrt(self.variance) * rng.standard_normal((count, self.dim))

    def _density(self, X):
        sq = np.sum((X - self.mean[None, :]) ** 2, axis=1)
        norm = (2.0 * np.pi * self.variance) ** (-self.dim / 2.0)
        return norm * np.exp(-sq / (2.0 * self.variance))
