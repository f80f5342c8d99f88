"""
Harness Package - Monte-Carlo power experiments.
"""

from .experiment import ExperimentConfig, load_config
from .power_table import CSV_COLUMNS, PowerRow, PowerTable, standard_error
from .runner import draw_replicate, run_experiment, run_experiments, run_replicate
from .presets import DESK_GRID, FIGURES, FigurePresets, get_preset
from .plotting import plot_power_table
from .reproduce import reproduce

__all__ = [
    "ExperimentConfig",
    "load_config",
    "CSV_COLUMNS",
    "PowerRow",
    "PowerTable",
    "standard_error",
    "draw_replicate",
    "run_experiment",
    "run_experiments",
    "run_replicate",
    "DESK_GRID",
    "FIGURES",
    "FigurePresets",
    "get_preset",
    "plot_power_table",
    "reproduce",
]
