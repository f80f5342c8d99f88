"""
Two-sample spectral regularized statistic.

eta_ts evaluates the statistic for one sample split from a GramBundle.
PooledQuadraticForm evaluates it for a whole batch of splits of the pooled
(X, X0) sample at once; permutation tests use it so the observed split and
every permuted split go through the same arithmetic.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np

from ..config import TEST
from ..errors import InvalidParameterError
from ..kernels import BaseKernel
from ..kernels.base_kernel import as_points
from ..kernels.gram import GramBundle
from ..regularizers import BaseRegularizer, check_lambda
from ..spectral import EigenSystem, regularized_operator
from .value import StatisticValue

logger = logging.getLogger(__name__)

COMPONENTS = ("sample_sum", "sample_diag", "null_sum", "null_diag", "cross_sum")


def combine_components(components: Dict[str, Any], n: int, m: int):
    """Assemble the U-statistic from its five quadratic-form terms."""
    return (
        (components["sample_sum"] - components["sample_diag"]) / (n * (n - 1))
        + (components["null_sum"] - components["null_diag"]) / (m * (m - 1))
        - 2.0 * components["cross_sum"] / (n * m)
    )


def _check_sizes(n: int, m: int):
    if n < 2 or m < 2:
        raise InvalidParameterError(f"U-statistic needs n, m >= 2, got n={n}, m={m}")


def eta_ts(
    grams: GramBundle,
    eigen: EigenSystem,
    reg: BaseRegularizer,
    lam: float,
    n: Optional[int] = None,
    m: Optional[int] = None,
    s: Optional[int] = None,
    kernel_id: str = "",
) -> StatisticValue:
    """
    Compute the two-sample statistic for one sample split.

    With C = (1/s) Ht^(1/2) G Ht^(1/2) the five terms are
        sample_sum  = 1^T (g(0) K_n + K_ns C K_ns^T) 1
        sample_diag = tr(g(0) K_n + K_ns C K_ns^T)
        null_sum, null_diag  likewise with K_m, K_ms
        cross_sum   = 1^T (g(0) K_mn + K_ms C K_ns^T) 1

    Args:
        grams: Gram blocks for X, X0, Y0
        eigen: Eigensystem of the covariance sample
        reg: Spectral regularizer
        lam: lambda > 0
        n, m, s: Optional sizes, checked against the bundle
        kernel_id: Label carried on the result
    """
    lam = check_lambda(lam)
    for name, given, actual in (("n", n, grams.n), ("m", m, grams.m), ("s", s, grams.s)):
        if given is not None and given != actual:
            raise InvalidParameterError(f"{name}={given} does not match the Gram blocks ({actual})")
    if eigen.sample_count != grams.s:
        raise InvalidParameterError("eigensystem and Gram blocks use different covariance samples")
    n, m = grams.n, grams.m
    _check_sizes(n, m)

    C = regularized_operator(eigen, reg, lam)
    g0 = reg.value_at_zero(lam)
    a = grams.K_ns.sum(axis=0)
    b = grams.K_ms.sum(axis=0)
    components = {
        "sample_sum": g0 * grams.K_n.sum() + a @ C @ a,
        "sample_diag": g0 * np.trace(grams.K_n) + np.sum((grams.K_ns @ C) * grams.K_ns),
        "null_sum": g0 * grams.K_m.sum() + b @ C @ b,
        "null_diag": g0 * np.trace(grams.K_m) + np.sum((grams.K_ms @ C) * grams.K_ms),
        "cross_sum": g0 * grams.K_mn.sum() + b @ C @ a,
    }
    components = {key: float(value) for key, value in components.items()}
    return StatisticValue(
        value=float(combine_components(components, n, m)),
        lam=lam,
        kernel_id=kernel_id,
        components=components,
    )


@dataclass(frozen=True)
class PartitionBatch:
    """
    Kernel-level sums for a batch of splits of the pooled sample.

    Row i describes the split whose first group is orders[i, :n].
    """

    orders: np.ndarray
    aKa: np.ndarray
    aKb: np.ndarray
    bKb: np.ndarray
    diag_a: np.ndarray
    diag_b: np.ndarray
    U: Optional[np.ndarray]
    V: Optional[np.ndarray]

    @property
    def size(self) -> int:
        return self.orders.shape[0]


class PooledQuadraticForm:
    """
    Batched two-sample quadratic forms over a pooled sample Z = (X, X0).

    For a split with indicator a (first group) and b = 1 - a the statistic
    needs a^T K a, a^T K b, b^T K b, the diagonal sums, and the projections
    L^T a, L^T b of the cross block L = K(Z, Y0). The kernel-level sums are
    computed once per batch of splits; only the C-dependent terms change
    with lambda.

    Example usage:
        engine = PooledQuadraticForm.from_bundle(grams)
        batch = engine.prepare(orders)
        values = engine.evaluate(batch, C, g0)
    """

    def __init__(self, K: np.ndarray, n: int, L: Optional[np.ndarray] = None):
        """
        Args:
            K: Pooled Gram matrix, shape (N, N)
            n: Size of the first group; the second has N - n
            L: Pooled cross block with the covariance sample, shape (N, s)
        """
        K = np.asarray(K, dtype=float)
        N = K.shape[0]
        _check_sizes(n, N - n)
        self.K = K
        self.L = None if L is None else np.asarray(L, dtype=float)
        self.n = int(n)
        self.m = N - self.n
        self._row_sums = K.sum(axis=1)
        self._total = float(self._row_sums.sum())
        self._diag = np.diag(K).copy()
        self._trace = float(self._diag.sum())
        self._L_sum = None if self.L is None else self.L.sum(axis=0)

    @property
    def pooled_size(self) -> int:
        return self.n + self.m

    @classmethod
    def from_bundle(cls, grams: GramBundle) -> "PooledQuadraticForm":
        """Pool the X and X0 blocks of a Gram bundle."""
        K = np.block([[grams.K_n, grams.K_mn.T], [grams.K_mn, grams.K_m]])
        L = np.vstack([grams.K_ns, grams.K_ms])
        return cls(K, grams.n, L)

    @classmethod
    def from_points(cls, kernel: BaseKernel, X: Any, X0: Any, Y0: Any) -> "PooledQuadraticForm":
        """Assemble the pooled blocks directly from the samples."""
        Z = np.vstack([as_points(X, "X"), as_points(X0, "X0")])
        Y0 = as_points(Y0, "Y0")
        return cls(kernel.gram(Z, Z), as_points(X).shape[0], kernel.gram(Z, Y0))

    def identity_order(self) -> np.ndarray:
        """Order placing X first, i.e. the observed split."""
        return np.arange(self.pooled_size)

    def prepare(self, orders: np.ndarray, batch_size: int = TEST["batch_size"]) -> PartitionBatch:
        """
        Compute the kernel-level sums for every split in `orders`.

        Args:
            orders: Integer array (B, N); row i is a permutation of range(N)
            batch_size: Rows turned into indicator matrices per product
        """
        orders = np.atleast_2d(np.asarray(orders, dtype=np.intp))
        if orders.shape[1] != self.pooled_size:
            raise InvalidParameterError(
                f"orders must have {self.pooled_size} columns, got {orders.shape[1]}"
            )
        count = orders.shape[0]
        aKa = np.empty(count)
        aK1 = np.empty(count)
        U = None if self.L is None else np.empty((count, self.L.shape[1]))
        first = orders[:, : self.n]
        for start in range(0, count, batch_size):
            stop = min(start + batch_size, count)
            P = np.zeros((stop - start, self.pooled_size))
            np.put_along_axis(P, first[start:stop], 1.0, axis=1)
            PK = P @ self.K
            aKa[start:stop] = np.sum(PK * P, axis=1)
            aK1[start:stop] = P @ self._row_sums
            if U is not None:
                U[start:stop] = P @ self.L
        diag_a = self._diag[first].sum(axis=1)
        return PartitionBatch(
            orders=orders,
            aKa=aKa,
            aKb=aK1 - aKa,
            bKb=self._total - 2.0 * aK1 + aKa,
            diag_a=diag_a,
            diag_b=self._trace - diag_a,
            U=U,
            V=None if U is None else self._L_sum[None, :] - U,
        )

    def operator_diagonal(self, C: np.ndarray) -> np.ndarray:
        """e_i = L_i C L_i^T for every pooled point; depends on lambda only."""
        return np.sum((self.L @ C) * self.L, axis=1)

    def components(
        self,
        batch: PartitionBatch,
        C: Optional[np.ndarray] = None,
        g0: float = 1.0,
        e: Optional[np.ndarray] = None,
    ):
        """
        The five quadratic-form terms for every split, as arrays.

        Args:
            batch: Prepared splits
            C: Regularized operator; None for a plain kernel statistic
            g0: Weight of the kernel terms, g(0)
            e: Cached operator_diagonal(C)
        """
        terms = {
            "sample_sum": g0 * batch.aKa,
            "sample_diag": g0 * batch.diag_a,
            "null_sum": g0 * batch.bKb,
            "null_diag": g0 * batch.diag_b,
            "cross_sum": g0 * batch.aKb,
        }
        if C is not None:
            if self.L is None:
                raise InvalidParameterError("C given but the engine has no covariance block")
            if e is None:
                e = self.operator_diagonal(C)
            e_a = e[batch.orders[:, : self.n]].sum(axis=1)
            UC = batch.U @ C
            terms["sample_sum"] = terms["sample_sum"] + np.sum(UC * batch.U, axis=1)
            terms["sample_diag"] = terms["sample_diag"] + e_a
            terms["null_sum"] = terms["null_sum"] + np.sum((batch.V @ C) * batch.V, axis=1)
            terms["null_diag"] = terms["null_diag"] + (e.sum() - e_a)
            terms["cross_sum"] = terms["cross_sum"] + np.sum(UC * batch.V, axis=1)
        return terms

    def evaluate(
        self,
        batch: PartitionBatch,
        C: Optional[np.ndarray] = None,
        g0: float = 1.0,
        e: Optional[np.ndarray] = None,
    ) -> np.ndarray:
        """Statistic value for every split in the batch."""
        return combine_components(self.components(batch, C, g0, e), self.n, self.m)

    def eta_values(
        self, batch: PartitionBatch, eigen: EigenSystem, reg: BaseRegularizer, lam: float
    ) -> np.ndarray:
        """Two-sample regularized statistic for every split at one lambda."""
        if self.L is None or eigen.sample_count != self.L.shape[1]:
            raise InvalidParameterError("eigensystem does not match the covariance block")
        C = regularized_operator(eigen, reg, lam)
        return self.evaluate(batch, C, reg.value_at_zero(lam))
