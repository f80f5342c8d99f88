"""
Experiment configuration.

An ExperimentConfig is one panel of a power figure: a null, an alternative
swept over one parameter, the methods to compare and the sample sizes.
Config files are JSON documents whose keys mirror the field names.
"""

import json
import math
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from ..config import HARNESS, TEST
from ..distributions import DistributionSpec, get_distribution
from ..errors import ConfigError, GofError
from ..procedures import MethodConfig


@dataclass
class ExperimentConfig:
    """
    A Monte-Carlo power experiment.

    Attributes:
        null: P0
        alternative: P, with `sweep_param` replaced by each sweep value
        methods: Methods compared on every replicate
        n: Sample size from P
        m: Null mean-sample size; defaults to m_ratio * n
        m_ratio: m / n when m is not given (>= 1)
        s: Null covariance-sample size
        sweep_param: Alternative parameter that is swept (None: one point)
        sweep_values: Values of sweep_param
        repetitions: R
        alpha: Level
        seed: Master seed
        panel: Label of this panel in tables and plots
    """

    null: DistributionSpec
    alternative: DistributionSpec
    methods: List[MethodConfig]
    n: int
    m: Optional[int] = None
    m_ratio: float = TEST["m_ratio"]
    s: int = TEST["covariance_samples"]
    sweep_param: Optional[str] = None
    sweep_values: List[float] = field(default_factory=lambda: [0.0])
    repetitions: int = HARNESS["repetitions"]
    alpha: float = TEST["alpha"]
    seed: int = HARNESS["seed"]
    panel: str = ""

    def __post_init__(self):
        self.validate()

    def validate(self):
        """Raise ConfigError with a precise message for any invalid field."""
        if self.repetitions < 1:
            raise ConfigError(f"repetitions must be >= 1, got {self.repetitions}")
        if self.n < 2:
            raise ConfigError(f"n must be >= 2, got {self.n}")
        if not 0.0 < self.alpha < 1.0:
            raise ConfigError(f"alpha must be in (0, 1), got {self.alpha}")
        if not self.methods:
            raise ConfigError("at least one method is required")
        if not self.sweep_values:
            raise ConfigError("sweep_values is empty")
        if self.sweep_param in ("d", "dim"):
            raise ConfigError("the dimension cannot be swept; use one panel per dimension")
        if self.null.dim != self.alternative.dim:
            raise ConfigError(
                f"null and alternative dimensions differ: {self.null.dim} vs {self.alternative.dim}"
            )
        for method in self.methods:
            if self.covariance_size(method) < 2:
                raise ConfigError(f"{method.label}: s must be >= 2")
            ratio = method.m_ratio if method.m_ratio is not None else self.m_ratio
            if (method.m_ratio is not None or self.m is None) and ratio < 1:
                raise ConfigError(f"{method.label}: m_ratio must be >= 1, got {ratio}")
            if self.null_size(method) < 2:
                raise ConfigError(f"{method.label}: m must be >= 2")
        labels = [method.label for method in self.methods]
        if len(set(labels)) != len(labels):
            raise ConfigError(f"method labels must be unique, got {labels}")
        try:
            get_distribution(self.null)
            for value in self.sweep_values:
                get_distribution(self.alternative_at(value))
        except GofError as exc:
            raise ConfigError(f"invalid distribution: {exc}") from exc

    def null_size(self, method: MethodConfig) -> int:
        if method.m_ratio is not None:
            return int(math.ceil(method.m_ratio * self.n))
        if self.m is not None:
            return int(self.m)
        return int(math.ceil(self.m_ratio * self.n))

    def covariance_size(self, method: MethodConfig) -> int:
        return int(method.s if method.s is not None else self.s)

    def alternative_at(self, value: float) -> DistributionSpec:
        if self.sweep_param is None:
            return self.alternative
        return self.alternative.with_params(**{self.sweep_param: value})

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ExperimentConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown experiment keys: {sorted(unknown)}")
        for required in ("null", "alternative", "methods", "n"):
            if required not in data:
                raise ConfigError(f"experiment needs '{required}'")
        values = dict(data)
        values["null"] = DistributionSpec.from_dict(data["null"])
        values["alternative"] = DistributionSpec.from_dict(data["alternative"])
        values["methods"] = [MethodConfig.from_dict(m) for m in data["methods"]]
        try:
            return cls(**values)
        except TypeError as exc:
            raise ConfigError(str(exc)) from exc

    def to_dict(self) -> Dict[str, Any]:
        data = {f.name: getattr(self, f.name) for f in fields(self)}
        data["null"] = self.null.to_dict()
        data["alternative"] = self.alternative.to_dict()
        data["methods"] = [m.to_dict() for m in self.methods]
        return data


def load_config(path: Union[str, Path]) -> List[ExperimentConfig]:
    """
    Load experiments from a JSON file.

    The document is one experiment object, a list of them, or
    {"experiments": [...]}.

    Raises:
        ConfigError: unreadable file or invalid content
    """
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    if isinstance(data, dict) and "experiments" in data:
        data = data["experiments"]
    items = data if isinstance(data, list) else [data]
    if not items or not all(isinstance(item, dict) for item in items):
        raise ConfigError(f"config {path} must hold experiment objects")
    return [ExperimentConfig.from_dict(item) for item in items]
