"""
Distributions Package - null and alternative laws for the experiments.
"""

import numpy as np

from .spec import DistributionSpec, FAMILY_ALIASES, format_spec, parse_spec
from .base_distribution import BaseDistribution, rejection_sample
from .cube import PerturbedUniform, UniformCube, dipole_bump
from .gaussian import GaussianDistribution
from .sphere import SphereUniform, VonMisesFisher, WatsonMixture, vmf_mean_resultant

from ..errors import ConfigError

# Registry of all available distributions
AVAILABLE_DISTRIBUTIONS = [
    UniformCube,
    PerturbedUniform,
    GaussianDistribution,
    SphereUniform,
    VonMisesFisher,
    WatsonMixture,
]


def get_distribution_by_name(name: str):
    """Get distribution class by family name"""
    name = FAMILY_ALIASES.get(name, name)
    for dist_class in AVAILABLE_DISTRIBUTIONS:
        if dist_class.FAMILY == name:
            return dist_class
    return None


def get_distribution(spec) -> BaseDistribution:
    """
    Instantiate the distribution a spec describes.

    Args:
        spec: DistributionSpec or shorthand string

    Raises:
        ConfigError: unknown family
    """
    if isinstance(spec, str):
        spec = parse_spec(spec)
    dist_class = get_distribution_by_name(spec.family)
    if dist_class is None:
        known = ", ".join(d.FAMILY for d in AVAILABLE_DISTRIBUTIONS)
        raise ConfigError(f"unknown distribution '{spec.family}' (known: {known})")
    return dist_class(spec)


def sample(spec, count: int, rng: np.random.Generator) -> np.ndarray:
    """Draw `count` i.i.d. points from the law `spec` describes."""
    return get_distribution(spec).sample(count, rng)


def density(spec, x) -> np.ndarray:
    """Density of `spec` at the points x."""
    return get_distribution(spec).density(x)


__all__ = [
    "DistributionSpec",
    "BaseDistribution",
    "UniformCube",
    "PerturbedUniform",
    "GaussianDistribution",
    "SphereUniform",
    "VonMisesFisher",
    "WatsonMixture",
    "AVAILABLE_DISTRIBUTIONS",
    "density",
    "dipole_bump",
    "format_spec",
    "get_distribution",
    "get_distribution_by_name",
    "parse_spec",
    "rejection_sample",
    "sample",
    "vmf_mean_resultant",
]
