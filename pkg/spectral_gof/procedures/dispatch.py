"""
Method dispatch - one entry point for every test procedure.

A MethodConfig names the method and how its kernel, regularizer and grids
are resolved from the data; run_method turns it into a TestOutcome. The CLI
and the experiment harness both go through here.
"""

import logging
from dataclasses import asdict, dataclass, field, fields
from typing import Any, Dict, List, Optional, Union

import numpy as np

from ..config import GRID, KERNEL, ORACLE, REGULARIZER, TEST
from ..distributions import DistributionSpec
from ..errors import ConfigError
from ..kernels import BaseKernel, bandwidth_grid, lambda_grid, make_kernel, median_heuristic
from ..regularizers import get_regularizer_by_name
from ..statistics import closed_form_null
from ..streams import SeedLike
from .concentration import adaptive_srct, srct
from .mmd_test import mmd_test
from .oracle_test import THRESHOLDS, adaptive_oracle_test
from .outcome import TestOutcome
from .permutation import minimum_permutations
from .permutation_tests import adaptive_srpt, energy_perm_test, srpt

logger = logging.getLogger(__name__)

METHODS = ("srct", "srpt", "oracle", "mmd", "energy-perm")


@dataclass
class MethodConfig:
    """
    A test method and its parameters.

    Attributes:
        name: One of METHODS
        label: Display name in tables and plots (defaults to name)
        kernel: Kernel family
        bandwidths: "auto" (doubling grid around the median heuristic),
            "median", a number, or a list of numbers (gaussian only)
        kernel_params: Extra kernel constructor arguments
        regularizer: Regularizer family
        lambdas: "grid" (doubling grid lambda_lower..lambda_upper), a number,
            or a list of numbers
        permutations: B, or "auto" to raise B to the Bonferroni minimum
        m_ratio / s: Per-method overrides of the experiment sample sizes
    """

    name: str
    label: Optional[str] = None
    kernel: str = KERNEL["default"]
    bandwidths: Union[str, float, List[float]] = "auto"
    kernel_params: Dict[str, Any] = field(default_factory=dict)
    w_lower: float = GRID["bandwidth_lower"]
    w_upper: float = GRID["bandwidth_upper"]
    regularizer: str = REGULARIZER["default"]
    lambdas: Union[str, float, List[float]] = "grid"
    lambda_lower: float = GRID["lambda_lower"]
    lambda_upper: float = GRID["lambda_upper"]
    permutations: Union[int, str] = TEST["permutations"]
    c1: float = TEST["c1"]
    m_ratio: Optional[float] = None
    s: Optional[int] = None
    k_max: int = ORACLE["k_max"]
    threshold: str = ORACLE["threshold"]
    null_draws: int = ORACLE["null_draws"]

    def __post_init__(self):
        if self.name not in METHODS:
            raise ConfigError(f"unknown method '{self.name}' (known: {', '.join(METHODS)})")
        if self.threshold not in THRESHOLDS:
            raise ConfigError(f"unknown oracle threshold '{self.threshold}'")
        if isinstance(self.permutations, str) and self.permutations != "auto":
            raise ConfigError(f"permutations must be an integer or 'auto', got '{self.permutations}'")
        if self.label is None:
            self.label = self.name
            if self.name == "oracle" and self.threshold != "chebyshev":
                self.label = f"oracle({self.threshold})"

    @classmethod
    def from_dict(cls, data: Union[str, Dict[str, Any]]) -> "MethodConfig":
        """Build from a config mapping; a bare string is a method name."""
        if isinstance(data, str):
            return cls(name=data)
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown method keys: {sorted(unknown)}")
        if "name" not in data:
            raise ConfigError("method needs a 'name'")
        return cls(**data)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def resolve_lambdas(self) -> List[float]:
        if isinstance(self.lambdas, str):
            if self.lambdas != "grid":
                raise ConfigError(f"lambdas must be 'grid', a number or a list, got '{self.lambdas}'")
            return lambda_grid(self.lambda_lower, self.lambda_upper)
        return [float(v) for v in np.atleast_1d(self.lambdas)]

    def resolve_kernels(self, X, X0) -> List[BaseKernel]:
        """Kernels for this data; bandwidth rules apply to the gaussian family."""
        if self.kernel != "gaussian":
            return [make_kernel(self.kernel, **self.kernel_params)]
        if isinstance(self.bandwidths, str):
            h_median = median_heuristic(X, X0)
            if self.bandwidths == "median" or (self.bandwidths == "auto" and self.name == "mmd"):
                widths = [h_median]
            elif self.bandwidths == "auto":
                widths = bandwidth_grid(h_median, self.w_lower, self.w_upper)
            else:
                raise ConfigError("bandwidths must be 'auto', 'median', a number or a list")
        else:
            widths = [float(v) for v in np.atleast_1d(self.bandwidths)]
        return [make_kernel("gaussian", bandwidth=h, **self.kernel_params) for h in widths]

    def resolve_permutations(self, cells: int, alpha: float) -> int:
        if self.permutations == "auto":
            return max(TEST["permutations"], minimum_permutations(cells, alpha))
        return int(self.permutations)


def run_method(
    method: MethodConfig,
    X,
    X0=None,
    Y0=None,
    null: Optional[DistributionSpec] = None,
    alpha: float = TEST["alpha"],
    seed: SeedLike = None,
) -> TestOutcome:
    """
    Run one configured test.

    Args:
        method: Method configuration
        X: Sample from P
        X0: Null sample for the mean embedding (two-sample methods)
        Y0: Null sample for the covariance operator (srct, srpt)
        null: Null spec (mmd closed form, oracle spectrum)
        alpha: Level
        seed: Seed or SeedSequence for permutations and null draws
    """
    name = method.name
    if name in ("srct", "srpt", "energy-perm") and X0 is None:
        raise ConfigError(f"{name} needs a null sample X0")
    if name in ("srct", "srpt") and Y0 is None:
        raise ConfigError(f"{name} needs a covariance sample Y0")
    if name in ("mmd", "oracle") and null is None:
        raise ConfigError(f"{name} needs the null distribution")

    if name == "energy-perm":
        return energy_perm_test(X, X0, alpha, method.resolve_permutations(1, alpha), seed)

    reg = get_regularizer_by_name(method.regularizer)
    lambdas = method.resolve_lambdas()

    if name == "mmd":
        kernels = method.resolve_kernels(X, X if X0 is None else X0)
        if len(kernels) != 1:
            raise ConfigError("mmd uses a single kernel; give one bandwidth")
        return mmd_test(X, kernels[0], null, alpha)

    if name == "oracle":
        kernel = method.resolve_kernels(X, X)[0]
        system = closed_form_null(kernel, null).spectrum
        if system is None:
            raise ConfigError(f"no Mercer expansion for {kernel.kernel_id} under {null}")
        return adaptive_oracle_test(
            X, reg, lambdas, alpha, system, method.k_max, method.threshold,
            method.null_draws, seed,
        )

    kernels = method.resolve_kernels(X, X0)
    cells = len(kernels) * len(lambdas)
    if name == "srct":
        if cells == 1:
            return srct(X, X0, Y0, kernels[0], reg, lambdas[0], alpha, method.c1)
        return adaptive_srct(X, X0, Y0, kernels, reg, lambdas, alpha, method.c1)

    B = method.resolve_permutations(cells, alpha)
    if cells == 1:
        return srpt(X, X0, Y0, kernels[0], reg, lambdas[0], alpha, B, seed)
    return adaptive_srpt(X, X0, Y0, kernels, reg, lambdas, alpha, B, seed)
