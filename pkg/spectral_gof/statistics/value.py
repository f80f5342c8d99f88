"""Statistic value container shared by every statistic."""

import math
from dataclasses import dataclass
from typing import Dict, Optional

from ..errors import DataError


@dataclass(frozen=True)
class StatisticValue:
    """
    A computed test statistic.

    Attributes:
        value: Statistic value
        lam: Regularization parameter (0 for unregularized statistics)
        kernel_id: Identifier of the kernel it was computed with
        components: Optional named terms the value is assembled from
    """

    value: float
    lam: float = 0.0
    kernel_id: str = ""
    components: Optional[Dict[str, float]] = None

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise DataError(f"statistic is not finite: {self.value}")

    def __float__(self) -> float:
        return float(self.value)
