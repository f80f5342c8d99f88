"""Run a figure preset end to end: experiments, CSV and plot."""

import logging
from pathlib import Path
from typing import Optional, Sequence, Tuple, Union

from ..config import HARNESS, PLOT
from .plotting import plot_power_table
from .power_table import PowerTable
from .presets import get_preset
from .runner import run_experiments

logger = logging.getLogger(__name__)


def reproduce(
    figure_id: str,
    out_dir: Union[str, Path] = ".",
    reps: Optional[int] = None,
    s_grid: Optional[Sequence[int]] = None,
    workers: int = HARNESS["workers"],
    seed: Optional[int] = None,
    oracle_threshold: Optional[str] = None,
) -> Tuple[PowerTable, Path, Path]:
    """
    Run a preset and write <figure_id>.csv and <figure_id>.svg.

    Returns:
        (table, csv_path, plot_path)
    """
    panels = get_preset(figure_id, reps=reps, s_grid=s_grid, seed=seed, oracle_threshold=oracle_threshold)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    logger.info("Reproducing %s: %d panel(s), R=%d", figure_id, len(panels), panels[0].repetitions)
    table = run_experiments(panels, workers)
    csv_path = out_dir / f"{figure_id}.csv"
    table.write_csv(csv_path)
    plot_path = plot_power_table(
        table,
        out_dir / f"{figure_id}.{PLOT['format']}",
        title=figure_id,
        xlabel=panels[0].sweep_param or "sweep value",
    )
    return table, csv_path, plot_path
