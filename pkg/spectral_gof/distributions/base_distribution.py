"""
Base Distribution - Abstract base class for null and alternative laws.

Design Philosophy:
- A distribution is built from a DistributionSpec and validated once
- Sampling takes an explicit numpy Generator; there is no global state
- Densities reject points outside the support of bounded families
"""

import logging
from abc import ABC, abstractmethod
from typing import Callable

import numpy as np

from ..config import DISTRIBUTION
from ..errors import DataError, InvalidParameterError
from ..kernels.base_kernel import as_points
from .spec import DistributionSpec

logger = logging.getLogger(__name__)


class BaseDistribution(ABC):
    """
    Abstract base class for distributions.

    Subclasses read their parameters in `__init__`, implement `_sample`
    and `_density` on validated arrays, and may override `_check_support`.
    """

    FAMILY = "base"
    NAME = "Base Distribution"
    DESCRIPTION = "Abstract distribution"
    PARAMETERS: tuple = ()

    def __init__(self, spec: DistributionSpec):
        unknown = set(spec.params) - set(self.PARAMETERS)
        if unknown:
            raise InvalidParameterError(
                f"{self.FAMILY} does not take parameters {sorted(unknown)}"
            )
        self.spec = spec
        self.dim = spec.dim

    @property
    def is_uniform_cube(self) -> bool:
        """True when the law is the uniform distribution on [0, 1]^d."""
        return False

    def sample(self, count: int, rng: np.random.Generator) -> np.ndarray:
        """
        Draw i.i.d. points.

        Args:
            count: Number of points, >= 1
            rng: Random generator

        Returns:
            Array of shape (count, d)
        """
        if int(count) < 1:
            raise InvalidParameterError(f"count must be >= 1, got {count}")
        return self._sample(int(count), rng)

    def density(self, x) -> np.ndarray:
        """
        Density at each point.

        Args:
            x: Points, shape (n, d) or a single point

        Returns:
            Array of shape (n,)
        """
        X = as_points(np.asarray(x, dtype=float).reshape(-1, self.dim), "x")
        self._check_support(X)
        return self._density(X)

    @abstractmethod
    def _sample(self, count: int, rng: np.random.Generator) -> np.ndarray:
        """Draw `count` points."""

    @abstractmethod
    def _density(self, X: np.ndarray) -> np.ndarray:
        """Density at validated points."""

    def _check_support(self, X: np.ndarray):
        """Hook for bounded families."""

    def get_info(self) -> dict:
        """Get distribution information."""
        return {
            "name": self.NAME,
            "family": self.FAMILY,
            "description": self.DESCRIPTION,
            "dim": self.dim,
            "params": dict(self.spec.params),
        }

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.spec})"


def rejection_sample(
    count: int,
    rng: np.random.Generator,
    propose: Callable[[int], np.ndarray],
    accept_prob: Callable[[np.ndarray], np.ndarray],
) -> np.ndarray:
    """
    Generic rejection sampler.

    Args:
        count: Points wanted
        rng: Random generator
        propose: k -> k proposals, shape (k, d)
        accept_prob: proposals -> acceptance probabilities in [0, 1]
    """
    batch = DISTRIBUTION["rejection_batch"]
    accepted = []
    have = 0
    for _ in range(DISTRIBUTION["max_rejection_rounds"]):
        proposals = propose(max(batch, 2 * (count - have)))
        keep = rng.random(proposals.shape[0]) < accept_prob(proposals)
        accepted.append(proposals[keep])
        have += int(keep.sum())
        if have >= count:
            return np.vstack(accepted)[:count]
    raise DataError(f"rejection sampler accepted only {have} of {count} points")
