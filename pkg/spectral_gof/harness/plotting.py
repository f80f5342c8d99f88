"""
Power plots - one axis per panel, one line per method with MC error bars.

Rendered with the Agg canvas to a self-contained SVG; no display needed.
"""

import logging
from pathlib import Path
from typing import Optional, Union

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from ..config import PLOT
from .power_table import PowerTable

logger = logging.getLogger(__name__)


def plot_power_table(
    table: PowerTable,
    path: Union[str, Path],
    title: Optional[str] = None,
    xlabel: str = "sweep value",
) -> Path:
    """
    Render a power table.

    Args:
        table: Rows to plot
        path: Output file; the extension picks the format (svg by default)
        title: Figure title
        xlabel: Label of the sweep axis

    Returns:
        The written path
    """
    path = Path(path)
    if not path.suffix:
        path = path.with_suffix("." + PLOT["format"])
    panels = table.panels() or [""]
    fig = Figure(figsize=(PLOT["figure_width"] * len(panels), PLOT["figure_height"]))
    FigureCanvasAgg(fig)
    axes = fig.subplots(1, len(panels), squeeze=False)[0]

    for ax, panel in zip(axes, panels):
        rows = table.filter(panel=panel)
        for index, method in enumerate(rows.methods()):
            points = sorted(rows.filter(method=method).rows, key=lambda row: row.sweep_value)
            ax.errorbar(
                [row.sweep_value for row in points],
                [row.rate for row in points],
                yerr=[row.se for row in points],
                marker=PLOT["marker"],
                capsize=PLOT["capsize"],
                color=PLOT["colors"][index % len(PLOT["colors"])],
                label=method,
            )
        ax.set_ylim(-0.02, 1.02)
        ax.set_xlabel(xlabel)
        ax.set_ylabel("rejection rate")
        ax.set_title(panel)
        ax.grid(True, alpha=0.3, linewidth=0.5)
        ax.legend(fontsize=8)

    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path)
    logger.info("Wrote %s", path)
    return path
