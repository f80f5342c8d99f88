"""
Distribution specifications and their command-line shorthand.

Shorthand: family:key=value,key=value
    vectors use ';' between entries, lists of vectors use '|'
    e.g. "gaussian:d=2,shift=0.5;0"  "vmf:d=3,kappa=2,mu=0;0;1"
"""

from dataclasses import dataclass, field
from typing import Any, Dict

from ..errors import ConfigError

# Short names accepted in shorthand and config files
FAMILY_ALIASES = {
    "uniform": "uniform_cube",
    "sphere": "sphere_uniform",
    "watson": "watson_mixture",
    "von_mises_fisher": "vmf",
}


@dataclass(frozen=True)
class DistributionSpec:
    """
    A distribution family with its dimension and parameters.

    Attributes:
        family: Registered family name
        dim: Ambient dimension d
        params: Family parameters (floats, vectors, lists of vectors)
    """

    family: str
    dim: int = 1
    params: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "family", FAMILY_ALIASES.get(self.family, self.family))
        if int(self.dim) < 1:
            raise ConfigError(f"dimension must be >= 1, got {self.dim}")
        object.__setattr__(self, "dim", int(self.dim))

    def get(self, key: str, default: Any = None) -> Any:
        return self.params.get(key, default)

    def with_params(self, **updates) -> "DistributionSpec":
        """Copy with some parameters replaced (used by sweeps)."""
        params = dict(self.params)
        dim = int(updates.pop("d", updates.pop("dim", self.dim)))
        params.update(updates)
        return DistributionSpec(self.family, dim, params)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "DistributionSpec":
        """Build from a config mapping {"family": ..., "dim": ..., "params": {...}}."""
        if isinstance(data, str):
            return parse_spec(data)
        unknown = set(data) - {"family", "dim", "params"}
        if unknown:
            raise ConfigError(f"unknown distribution keys: {sorted(unknown)}")
        if "family" not in data:
            raise ConfigError("distribution needs a 'family'")
        return cls(data["family"], int(data.get("dim", 1)), dict(data.get("params", {})))

    def to_dict(self) -> Dict[str, Any]:
        return {"family": self.family, "dim": self.dim, "params": dict(self.params)}

    def __str__(self) -> str:
        return format_spec(self)


def _parse_value(text: str) -> Any:
    if "|" in text:
        return [_parse_value(part) for part in text.split("|")]
    if ";" in text:
        return [float(part) for part in text.split(";") if part != ""]
    try:
        number = float(text)
    except ValueError:
        return text
    return int(number) if number.is_integer() and "." not in text and "e" not in text.lower() else number


def parse_spec(text: str) -> DistributionSpec:
    """
    Parse "family:key=value,..." into a DistributionSpec.

    Raises:
        ConfigError: malformed shorthand
    """
    family, _, rest = text.strip().partition(":")
    if not family:
        raise ConfigError(f"missing distribution family in '{text}'")
    dim = 1
    params: Dict[str, Any] = {}
    for item in filter(None, (part.strip() for part in rest.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(f"expected key=value, got '{item}' in '{text}'")
        try:
            parsed = _parse_value(value.strip())
        except ValueError as exc:
            raise ConfigError(f"bad value for '{key}' in '{text}': {exc}") from exc
        if key.strip() in ("d", "dim"):
            dim = int(parsed)
        else:
            params[key.strip()] = parsed
    return DistributionSpec(family, dim, params)


def _format_value(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        if value and isinstance(value[0], (list, tuple)):
            return "|".join(_format_value(v) for v in value)
        return ";".join(f"{float(v):g}" for v in value)
    if isinstance(value, float):
        return f"{value:g}"
    return str(value)


def format_spec(spec: DistributionSpec) -> str:
    """Inverse of parse_spec (up to float formatting)."""
    items = [f"d={spec.dim}"] + [f"{k}={_format_value(v)}" for k, v in sorted(spec.params.items())]
    return f"{spec.family}:{','.join(items)}"
