"""Argument checks shared by the test procedures."""

from typing import List, Sequence, Union

import numpy as np

from ..errors import DataError, InvalidParameterError
from ..kernels import BaseKernel
from ..kernels.base_kernel import as_points
from ..regularizers import check_lambda


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 < alpha < 1.0:
        raise InvalidParameterError(f"alpha must be in (0, 1), got {alpha}")
    return alpha


def check_samples(X, X0, Y0=None):
    """Validate sample arrays; returns them as 2-D float arrays."""
    X = as_points(X, "X")
    X0 = as_points(X0, "X0")
    if X.shape[0] < 2 or X0.shape[0] < 2:
        raise InvalidParameterError(
            f"two-sample statistics need n, m >= 2, got n={X.shape[0]}, m={X0.shape[0]}"
        )
    arrays = [X, X0]
    if Y0 is not None:
        Y0 = as_points(Y0, "Y0")
        if Y0.shape[0] < 2:
            raise InvalidParameterError(f"covariance sample needs s >= 2, got {Y0.shape[0]}")
        arrays.append(Y0)
    dims = {a.shape[1] for a in arrays}
    if len(dims) != 1:
        raise DataError(f"samples have different dimensions: {sorted(dims)}")
    return tuple(arrays)


def as_kernel_list(kernels: Union[BaseKernel, Sequence[BaseKernel]]) -> List[BaseKernel]:
    kernels = [kernels] if isinstance(kernels, BaseKernel) else list(kernels)
    if not kernels:
        raise InvalidParameterError("kernel grid is empty")
    return kernels


def as_lambda_list(lambdas) -> List[float]:
    lambdas = [float(lambdas)] if np.ndim(lambdas) == 0 else [float(v) for v in lambdas]
    if not lambdas:
        raise InvalidParameterError("lambda grid is empty")
    return [check_lambda(v) for v in lambdas]
