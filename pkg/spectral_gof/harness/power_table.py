"""
Power Table - estimated rejection rates of a Monte-Carlo experiment.

The CSV is the canonical artifact. Floats are written with repr so a table
read back compares equal to the one written; wall time is kept on the rows
for logging but never written, so fixed-seed CSVs are byte-identical.
"""

import csv
import io
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, List, Optional, Union

from ..errors import DataError

CSV_COLUMNS = ("panel", "sweep_value", "method", "rate", "se", "reps")


def standard_error(rate: float, reps: int) -> float:
    """Monte-Carlo standard error sqrt(p (1 - p) / R)."""
    return math.sqrt(rate * (1.0 - rate) / reps)


@dataclass(frozen=True)
class PowerRow:
    """Rejection rate of one method at one sweep value."""

    panel: str
    sweep_value: float
    method: str
    rate: float
    se: float
    reps: int
    wall_time: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if not 0.0 <= self.rate <= 1.0:
            raise DataError(f"rate must be in [0, 1], got {self.rate}")
        if self.reps < 1:
            raise DataError(f"reps must be >= 1, got {self.reps}")

    @classmethod
    def from_counts(
        cls, panel: str, sweep_value: float, method: str, rejections: int, reps: int,
        wall_time: float = 0.0,
    ) -> "PowerRow":
        rate = rejections / reps
        return cls(panel, float(sweep_value), method, rate, standard_error(rate, reps), reps, wall_time)


class PowerTable:
    """Ordered collection of PowerRow."""

    def __init__(self, rows: Optional[Iterable[PowerRow]] = None):
        self.rows: List[PowerRow] = list(rows or [])

    def add(self, row: PowerRow):
        self.rows.append(row)

    def extend(self, other: "PowerTable"):
        self.rows.extend(other.rows)

    def panels(self) -> List[str]:
        return list(dict.fromkeys(row.panel for row in self.rows))

    def methods(self, panel: Optional[str] = None) -> List[str]:
        return list(dict.fromkeys(row.method for row in self.filter(panel=panel).rows))

    def filter(self, panel: Optional[str] = None, method: Optional[str] = None) -> "PowerTable":
        return PowerTable(
            row for row in self.rows
            if (panel is None or row.panel == panel) and (method is None or row.method == method)
        )

    def rate(self, panel: str, method: str, sweep_value: float) -> float:
        """Rate of one cell; raises KeyError if absent."""
        for row in self.rows:
            if row.panel == panel and row.method == method and row.sweep_value == sweep_value:
                return row.rate
        raise KeyError((panel, method, sweep_value))

    def to_csv_string(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in self.rows:
            writer.writerow(
                [row.panel, repr(row.sweep_value), row.method, repr(row.rate), repr(row.se), row.reps]
            )
        return buffer.getvalue()

    def write_csv(self, path: Union[str, Path]):
        Path(path).write_text(self.to_csv_string(), encoding="utf-8")

    @classmethod
    def from_csv_string(cls, text: str) -> "PowerTable":
        reader = csv.DictReader(io.StringIO(text))
        if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
            raise DataError(f"power table columns must be {CSV_COLUMNS}, got {reader.fieldnames}")
        try:
            return cls(
                PowerRow(
                    panel=record["panel"],
                    sweep_value=float(record["sweep_value"]),
                    method=record["method"],
                    rate=float(record["rate"]),
                    se=float(record["se"]),
                    reps=int(record["reps"]),
                )
                for record in reader
            )
        except (TypeError, ValueError) as exc:
            raise DataError(f"malformed power table: {exc}") from exc

    @classmethod
    def read_csv(cls, path: Union[str, Path]) -> "PowerTable":
        return cls.from_csv_string(Path(path).read_text(encoding="utf-8"))

    def __eq__(self, other) -> bool:
        return isinstance(other, PowerTable) and self.rows == other.rows

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)
