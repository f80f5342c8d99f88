"""
Permutation plans and the rank decision rule.

A plan produces the ensemble of pooled orderings: slot 0 is the observed
split (identity ordering) and slots 1..B are uniform random permutations,
each drawn from its own substream of the plan's seed. The exhaustive plan
lists all (n+m)! orderings instead.
"""

import itertools
import logging
import math
from typing import Iterator, Optional, Tuple

import numpy as np

from ..config import TEST
from ..errors import InvalidParameterError
from ..streams import SeedLike, as_seed_sequence, generator

logger = logging.getLogger(__name__)


class PermutationPlan:
    """
    Ensemble of orderings of the pooled (X, X0) sample.

    Example usage:
        plan = PermutationPlan(B=60, seed=1234)
        for start, orders in plan.chunks(pooled_size, batch_size=256):
            ...
    """

    def __init__(self, B: int, seed: SeedLike = None):
        """
        Args:
            B: Number of random permutations, >= 1
            seed: Master seed or SeedSequence; permutation i uses key (i,)
        """
        if int(B) < 1:
            raise InvalidParameterError(f"B must be >= 1, got {B}")
        self.B = int(B)
        self.seed = as_seed_sequence(seed)
        self._explicit: Optional[np.ndarray] = None

    @classmethod
    def exhaustive(cls, n: int, m: int) -> "PermutationPlan":
        """Plan enumerating every ordering of n + m points."""
        size = int(n) + int(m)
        if size > 10:
            raise InvalidParameterError(f"{size}! orderings are too many to enumerate")
        orders = np.array(list(itertools.permutations(range(size))), dtype=np.intp)
        plan = cls(B=orders.shape[0] - 1, seed=0)
        plan._explicit = orders
        return plan

    @property
    def is_exhaustive(self) -> bool:
        return self._explicit is not None

    @property
    def size(self) -> int:
        """Ensemble size including the observed slot."""
        return self.B + 1

    def order(self, index: int, pooled_size: int) -> np.ndarray:
        """Ordering at slot `index` (0 is the identity)."""
        if self._explicit is not None:
            return self._explicit[index]
        if index == 0:
            return np.arange(pooled_size)
        return generator(self.seed, index).permutation(pooled_size)

    def chunks(
        self, pooled_size: int, batch_size: int = TEST["batch_size"]
    ) -> Iterator[Tuple[int, np.ndarray]]:
        """Yield (start, orders) blocks covering slots 0..B."""
        if self._explicit is not None and self._explicit.shape[1] != pooled_size:
            raise InvalidParameterError(
                f"exhaustive plan is for {self._explicit.shape[1]} points, got {pooled_size}"
            )
        for start in range(0, self.size, batch_size):
            stop = min(start + batch_size, self.size)
            yield start, np.vstack([self.order(i, pooled_size) for i in range(start, stop)])


def rejection_budget(alpha: float, size: int) -> int:
    """floor(alpha * size): how many ensemble values may reach the observed one."""
    return int(math.floor(alpha * size + 1e-9))


def minimum_permutations(cells: int, alpha: float) -> int:
    """Smallest B for which a Bonferroni cell at alpha / cells can reject."""
    return int(math.ceil(cells / alpha)) - 1


def permutation_decision(
    values: np.ndarray, alpha: float, tie_tol: float = TEST["tie_tol"]
) -> Tuple[bool, float, int]:
    """
    Rank rule with the observed statistic in slot 0.

    Rejects iff at most floor(alpha (B+1)) ensemble values are >= the observed
    one; the observed value counts itself, and near-ties count as >=. The
    reported critical value is the smallest ensemble value that would reject
    in slot 0 (inf when none would), so reject iff observed >= critical.

    Returns:
        (reject, critical_value, exceed_count)
    """
    values = np.asarray(values, dtype=float)
    size = values.shape[0]
    observed = values[0]
    slack = tie_tol * max(1.0, float(np.max(np.abs(values))))
    exceed = int(np.sum(values >= observed - slack))
    budget = rejection_budget(alpha, size)
    ordered = np.sort(values)
    at_or_above = size - np.searchsorted(ordered, ordered - slack, side="left")
    rejecting = at_or_above <= budget
    critical = float(ordered[np.argmax(rejecting)]) if rejecting.any() else math.inf
    return exceed <= budget, critical, exceed
