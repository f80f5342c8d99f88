"""
Permutation tests: SRPT, its adaptive union over (lambda, kernel) cells,
and the energy-distance permutation baseline.

All cells share one permutation ensemble. For each kernel the pooled Gram
blocks and the covariance eigensystem are computed once; every lambda only
changes the s x s operator C.
"""

import logging
from typing import List, Sequence, Tuple

import numpy as np

from ..config import TEST
from ..kernels import BaseKernel
from ..regularizers import BaseRegularizer
from ..spectral import centered_eigensystem, n2_hat, regularized_operator
from ..statistics import PooledQuadraticForm, pooled_distances
from ..streams import SeedLike
from .common import as_kernel_list, as_lambda_list, check_alpha, check_samples
from .outcome import GridCellResult, TestOutcome
from .permutation import PermutationPlan, minimum_permutations, permutation_decision

logger = logging.getLogger(__name__)


def _as_plan(B: int, rng) -> PermutationPlan:
    return rng if isinstance(rng, PermutationPlan) else PermutationPlan(B, rng)


def cell_ensembles(
    X: np.ndarray,
    X0: np.ndarray,
    Y0: np.ndarray,
    kernels: Sequence[BaseKernel],
    reg: BaseRegularizer,
    lambdas: Sequence[float],
    plan: PermutationPlan,
    batch_size: int = TEST["batch_size"],
) -> Tuple[np.ndarray, List[Tuple[BaseKernel, float, float]]]:
    """
    Statistic ensembles for every (kernel, lambda) cell.

    Returns:
        values: Array (cells, B + 1); column 0 is the observed split
        cells: (kernel, lambda, N2) per row, kernel-major
    """
    pooled_size = X.shape[0] + X0.shape[0]
    values = np.empty((len(kernels) * len(lambdas), plan.size))
    cells = []
    for k_index, kernel in enumerate(kernels):
        engine = PooledQuadraticForm.from_points(kernel, X, X0, Y0)
        eigen = centered_eigensystem(kernel.gram(Y0, Y0), kernel.bound)
        operators = []
        for lam in lambdas:
            C = regularized_operator(eigen, reg, lam)
            operators.append((C, reg.value_at_zero(lam), engine.operator_diagonal(C)))
            cells.append((kernel, lam, n2_hat(eigen, lam)))
        for start, orders in plan.chunks(pooled_size, batch_size):
            batch = engine.prepare(orders, batch_size)
            for l_index, (C, g0, e) in enumerate(operators):
                row = k_index * len(lambdas) + l_index
                values[row, start : start + batch.size] = engine.evaluate(batch, C, g0, e)
    return values, cells


def srpt(
    X,
    X0,
    Y0,
    kernel: BaseKernel,
    reg: BaseRegularizer,
    lam: float,
    alpha: float = TEST["alpha"],
    B: int = TEST["permutations"],
    rng: SeedLike = None,
) -> TestOutcome:
    """
    Spectral regularized permutation test.

    Args:
        X, X0, Y0: Sample, mean null sample, covariance null sample
        kernel: Kernel
        reg: Spectral regularizer
        lam: lambda > 0
        alpha: Level
        B: Number of permutations
        rng: Seed, SeedSequence or a ready PermutationPlan
    """
    alpha = check_alpha(alpha)
    X, X0, Y0 = check_samples(X, X0, Y0)
    plan = _as_plan(B, rng)
    values, cells = cell_ensembles(X, X0, Y0, [kernel], reg, as_lambda_list(lam), plan)
    reject, critical, exceed = permutation_decision(values[0], alpha)
    return TestOutcome(
        reject=reject,
        statistic=float(values[0, 0]),
        critical_value=critical,
        alpha=alpha,
        method="srpt",
        diagnostics={"n2_hat": cells[0][2], "permutations": float(plan.B), "exceed": float(exceed)},
    )


def adaptive_srpt(
    X,
    X0,
    Y0,
    kernels,
    reg: BaseRegularizer,
    lambdas,
    alpha: float = TEST["alpha"],
    B: int = TEST["permutations"],
    rng: SeedLike = None,
) -> TestOutcome:
    """
    Union of permutation tests over Lambda x W with a shared ensemble.

    Each cell is tested at alpha / (|Lambda| |W|); rejects iff any cell does.
    """
    alpha = check_alpha(alpha)
    X, X0, Y0 = check_samples(X, X0, Y0)
    kernels = as_kernel_list(kernels)
    lambdas = as_lambda_list(lambdas)
    plan = _as_plan(B, rng)
    count = len(kernels) * len(lambdas)
    cell_alpha = alpha / count
    needed = minimum_permutations(count, alpha)
    if plan.B < needed:
        logger.warning(
            "B=%d permutations cannot reject at alpha/%d; at least %d are needed",
            plan.B, count, needed,
        )

    values, cells = cell_ensembles(X, X0, Y0, kernels, reg, lambdas, plan)
    results = []
    deciding = None
    for row, (kernel, lam, n2) in enumerate(cells):
        reject, critical, exceed = permutation_decision(values[row], cell_alpha)
        results.append(
            GridCellResult(lam, kernel.kernel_id, float(values[row, 0]), critical, reject, n2)
        )
        if deciding is None or exceed < deciding[0]:
            deciding = (exceed, results[-1])

    return TestOutcome(
        reject=any(cell.reject for cell in results),
        statistic=deciding[1].statistic,
        critical_value=deciding[1].critical_value,
        alpha=alpha,
        method="srpt" if count == 1 else "adaptive-srpt",
        per_grid_results=results,
        diagnostics={"cells": float(count), "permutations": float(plan.B)},
    )


def energy_perm_test(
    X,
    X0,
    alpha: float = TEST["alpha"],
    B: int = TEST["permutations"],
    rng: SeedLike = None,
) -> TestOutcome:
    """Permutation test on the energy distance between X and X0."""
    alpha = check_alpha(alpha)
    X, X0 = check_samples(X, X0)
    plan = _as_plan(B, rng)
    engine = PooledQuadraticForm(pooled_distances(X, X0), X.shape[0])
    values = np.empty(plan.size)
    for start, orders in plan.chunks(engine.pooled_size):
        batch = engine.prepare(orders)
        values[start : start + batch.size] = engine.evaluate(batch)
    reject, critical, exceed = permutation_decision(values, alpha)
    return TestOutcome(
        reject=reject,
        statistic=float(values[0]),
        critical_value=critical,
        alpha=alpha,
        method="energy-perm",
        diagnostics={"permutations": float(plan.B), "exceed": float(exceed)},
    )
