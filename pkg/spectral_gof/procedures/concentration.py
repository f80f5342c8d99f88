"""
Concentration tests: the SRCT threshold and its adaptive union.

The threshold is
    gamma = 12 (C1 + C2) N2(lambda) / (b1 sqrt(alpha)) * (1/n + 1/m)
    b1 = sqrt(4/9 - 16 / (3 sqrt(3 c1)) - 32 / (9 c1)),  c1 >= 65
"""

import logging
import math

import numpy as np

from ..config import TEST
from ..errors import InvalidParameterError
from ..kernels import GramBundle
from ..regularizers import BaseRegularizer
from ..spectral import centered_eigensystem, n1_hat, n2_hat
from ..statistics import eta_ts
from .common import as_kernel_list, as_lambda_list, check_alpha, check_samples
from .outcome import GridCellResult, TestOutcome

logger = logging.getLogger(__name__)

MIN_C1 = 65.0


def b1_constant(c1: float = TEST["c1"]) -> float:
    """b1 for a given c1; requires c1 >= 65."""
    c1 = float(c1)
    if c1 < MIN_C1:
        raise InvalidParameterError(f"c1 must be >= {MIN_C1:g}, got {c1:g}")
    squared = 4.0 / 9.0 - 16.0 / (3.0 * math.sqrt(3.0 * c1)) - 32.0 / (9.0 * c1)
    if squared <= 0:
        raise InvalidParameterError(f"b1^2 = {squared:.3g} <= 0 for c1={c1:g}")
    return math.sqrt(squared)


def srct_threshold(
    n2: float, alpha: float, n: int, m: int, reg: BaseRegularizer, c1: float = TEST["c1"]
) -> float:
    """Critical value gamma for the concentration test."""
    alpha = check_alpha(alpha)
    return 12.0 * (reg.C1 + reg.C2) * n2 / (b1_constant(c1) * math.sqrt(alpha)) * (1.0 / n + 1.0 / m)


def _cell_threshold(
    n2: float, alpha: float, n: int, m: int, reg: BaseRegularizer, c1: float
) -> float:
    # N2 = 0 means a flat covariance sample; such a cell never rejects.
    if n2 <= 0:
        logger.warning("N2(lambda) = 0 on the covariance sample; the cell cannot reject")
        return math.inf
    return srct_threshold(n2, alpha, n, m, reg, c1)


def srct(
    X,
    X0,
    Y0,
    kernel,
    reg: BaseRegularizer,
    lam: float,
    alpha: float = TEST["alpha"],
    c1: float = TEST["c1"],
) -> TestOutcome:
    """
    Spectral regularized concentration test.

    Args:
        X: Sample from P, (n, d)
        X0: Null sample for the mean embedding, (m, d)
        Y0: Null sample for the covariance operator, (s, d)
        kernel: Kernel
        reg: Spectral regularizer
        lam: lambda > 0
        alpha: Level
        c1: Concentration constant, >= 65
    """
    alpha = check_alpha(alpha)
    X, X0, Y0 = check_samples(X, X0, Y0)
    b1 = b1_constant(c1)
    reg.verify_constants(kernel.bound)
    grams = GramBundle.build(kernel, X, X0, Y0)
    eigen = centered_eigensystem(grams.K_s, kernel.bound)
    stat = eta_ts(grams, eigen, reg, lam, kernel_id=kernel.kernel_id)
    n2 = n2_hat(eigen, lam)
    gamma = _cell_threshold(n2, alpha, grams.n, grams.m, reg, c1)
    return TestOutcome(
        reject=bool(stat.value >= gamma),
        statistic=stat.value,
        critical_value=gamma,
        alpha=alpha,
        method="srct",
        diagnostics={"n1_hat": n1_hat(eigen, lam), "n2_hat": n2, "b1": b1, "lambda": lam},
    )


def adaptive_srct(
    X,
    X0,
    Y0,
    kernels,
    reg: BaseRegularizer,
    lambdas,
    alpha: float = TEST["alpha"],
    c1: float = TEST["c1"],
) -> TestOutcome:
    """
    Union of concentration tests over lambda (and kernel) grids.

    Each cell compares eta / N2 with the threshold at alpha / |cells|
    (computed without N2); one eigensystem per kernel is reused for every
    lambda. Rejects iff any cell does.
    """
    alpha = check_alpha(alpha)
    X, X0, Y0 = check_samples(X, X0, Y0)
    kernels = as_kernel_list(kernels)
    lambdas = as_lambda_list(lambdas)
    cells = len(kernels) * len(lambdas)
    cell_alpha = alpha / cells
    b1 = b1_constant(c1)

    results = []
    best = (-np.inf, None)
    for kernel in kernels:
        reg.verify_constants(kernel.bound)
        grams = GramBundle.build(kernel, X, X0, Y0)
        eigen = centered_eigensystem(grams.K_s, kernel.bound)
        for lam in lambdas:
            stat = eta_ts(grams, eigen, reg, lam, kernel_id=kernel.kernel_id).value
            n2 = n2_hat(eigen, lam)
            gamma = _cell_threshold(n2, cell_alpha, grams.n, grams.m, reg, c1)
            reject = bool(stat >= gamma)
            results.append(GridCellResult(lam, kernel.kernel_id, stat, gamma, reject, n2))
            normalized = stat / n2 if n2 > 0 else -np.inf
            if normalized > best[0]:
                best = (normalized, results[-1])

    normalized_gamma = srct_threshold(1.0, cell_alpha, X.shape[0], X0.shape[0], reg, c1)
    reject = any(cell.reject for cell in results)
    logger.debug("adaptive srct: %d cells, reject=%s", cells, reject)
    return TestOutcome(
        reject=reject,
        statistic=float(best[0]),
        critical_value=normalized_gamma,
        alpha=alpha,
        method="srct" if cells == 1 else "adaptive-srct",
        per_grid_results=results,
        diagnostics={"cells": float(cells), "b1": b1},
    )
