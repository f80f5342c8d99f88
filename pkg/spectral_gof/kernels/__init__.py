"""
Kernels Package - positive-definite kernels, Gram assembly and bandwidth grids.
"""
from .base_kernel import BaseKernel, as_points
from .gaussian import GaussianKernel
from .periodic_spline import PeriodicSplineKernel
from .finite_rank import FiniteRankKernel
from .gram import (
    GramBundle,
    gram,
    median_heuristic,
    doubling_grid,
    bandwidth_grid,
    lambda_grid,
)

from ..errors import ConfigError

# Registry of all available kernels
AVAILABLE_KERNELS = [
    GaussianKernel,
    PeriodicSplineKernel,
    FiniteRankKernel,
]

# Short names accepted on the command line
_ALIASES = {
    "spline": "periodic_spline",
    "finite_rank": "finite_rank_test",
}


def get_kernel_by_name(name: str):
    """Get kernel class by family name"""
    name = _ALIASES.get(name, name)
    for kernel_class in AVAILABLE_KERNELS:
        if kernel_class.FAMILY == name:
            return kernel_class
    return None


def make_kernel(name: str, **params) -> BaseKernel:
    """
    Instantiate a kernel by family name.

    Raises:
        ConfigError: unknown family
    """
    kernel_class = get_kernel_by_name(name)
    if kernel_class is None:
        known = ", ".join(k.FAMILY for k in AVAILABLE_KERNELS)
        raise ConfigError(f"unknown kernel '{name}' (known: {known})")
    return kernel_class(**params)


__all__ = [
    "BaseKernel",
    "GaussianKernel",
    "PeriodicSplineKernel",
    "FiniteRankKernel",
    "GramBundle",
    "AVAILABLE_KERNELS",
    "as_points",
    "gram",
    "median_heuristic",
    "doubling_grid",
    "bandwidth_grid",
    "lambda_grid",
    "get_kernel_by_name",
    "make_kernel",
]
