"""Decision records returned by every test procedure."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional


@dataclass(frozen=True)
class GridCellResult:
    """One (lambda, kernel) cell of an adaptive test."""

    lam: float
    kernel_id: str
    statistic: float
    critical_value: float
    reject: bool
    n2_hat: Optional[float] = None


@dataclass(frozen=True)
class TestOutcome:
    """
    Result of one goodness-of-fit test.

    Attributes:
        reject: Decision (True rejects H0)
        statistic: Observed statistic (for adaptive tests, of the deciding cell)
        critical_value: Threshold or permutation quantile it was compared with
        alpha: Level
        method: Method tag, e.g. "srpt"
        per_grid_results: Cell results of adaptive tests
        diagnostics: Extra numbers (N2, b1, permutation count, ...)
    """

    __test__ = False  # not a pytest class

    reject: bool
    statistic: float
    critical_value: float
    alpha: float
    method: str
    per_grid_results: Optional[List[GridCellResult]] = None
    diagnostics: Dict[str, float] = field(default_factory=dict)

    @property
    def decision(self) -> str:
        return "reject" if self.reject else "accept"

    def summary(self) -> str:
        """One-line human-readable decision."""
        cells = f" cells={len(self.per_grid_results)}" if self.per_grid_results else ""
        return (
            f"{self.method}: {self.decision} H0 (statistic={self.statistic:.6g}, "
            f"critical={self.critical_value:.6g}, alpha={self.alpha:g}{cells})"
        )
