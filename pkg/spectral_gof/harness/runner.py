"""
Experiment runner - the Monte-Carlo pipeline.

Architecture:
    ExperimentConfig -> replicate tasks -> run_method per method -> PowerTable

Each replicate draws X from the alternative and one X0 / Y0 pair from the
null at the largest sizes any method needs; methods use prefixes of them.
All draws come from substreams keyed by (sweep, replicate, ...), so serial
and process-parallel runs produce identical decisions.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from ..config import HARNESS
from ..distributions import get_distribution
from ..procedures import run_method
from ..streams import child, generator
from .experiment import ExperimentConfig
from .power_table import PowerRow, PowerTable

logger = logging.getLogger(__name__)

# spawn-key slots under (sweep, replicate)
_SAMPLE_SLOT = 0
_METHOD_SLOT = 1


def draw_replicate(config: ExperimentConfig, sweep_index: int, replicate: int):
    """
    Samples of one replicate.

    Returns:
        (X, X0, Y0) with X0 / Y0 at the largest m / s over the methods
    """
    m_max = max(config.null_size(method) for method in config.methods)
    s_max = max(config.covariance_size(method) for method in config.methods)
    alternative = get_distribution(config.alternative_at(config.sweep_values[sweep_index]))
    null = get_distribution(config.null)
    key = (sweep_index, replicate, _SAMPLE_SLOT)
    X = alternative.sample(config.n, generator(config.seed, *key, 0))
    X0 = null.sample(m_max, generator(config.seed, *key, 1))
    Y0 = null.sample(s_max, generator(config.seed, *key, 2))
    return X, X0, Y0


def run_replicate(task: Tuple[ExperimentConfig, int, int]) -> List[Tuple[bool, float]]:
    """
    Run every method on one replicate.

    Returns:
        (reject, seconds) per method, in config order
    """
    config, sweep_index, replicate = task
    X, X0, Y0 = draw_replicate(config, sweep_index, replicate)
    results = []
    for index, method in enumerate(config.methods):
        seed = child(config.seed, sweep_index, replicate, _METHOD_SLOT, index)
        started = time.perf_counter()
        outcome = run_method(
            method,
            X,
            X0[: config.null_size(method)],
            Y0[: config.covariance_size(method)],
            null=config.null,
            alpha=config.alpha,
            seed=seed,
        )
        results.append((outcome.reject, time.perf_counter() - started))
    return results


def _tasks(config: ExperimentConfig, sweep_index: int) -> Iterable[Tuple[ExperimentConfig, int, int]]:
    return ((config, sweep_index, r) for r in range(config.repetitions))


def run_experiment(config: ExperimentConfig, workers: int = HARNESS["workers"]) -> PowerTable:
    """
    Estimate rejection rates for every (sweep value, method).

    Args:
        config: Experiment
        workers: Process pool size; 1 runs in this process
    """
    table = PowerTable()
    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for sweep_index, value in enumerate(config.sweep_values):
            started = time.perf_counter()
            tasks = _tasks(config, sweep_index)
            if executor is None:
                outcomes = [run_replicate(task) for task in tasks]
            else:
                outcomes = list(executor.map(run_replicate, tasks))
            decisions = np.array([[reject for reject, _ in row] for row in outcomes], dtype=bool)
            seconds = np.array([[spent for _, spent in row] for row in outcomes])
            for index, method in enumerate(config.methods):
                table.add(
                    PowerRow.from_counts(
                        config.panel,
                        value,
                        method.label,
                        int(decisions[:, index].sum()),
                        config.repetitions,
                        wall_time=float(seconds[:, index].sum()),
                    )
                )
            logger.info(
                "%s %s=%s: %s (%.1fs)",
                config.panel or "experiment",
                config.sweep_param or "point",
                value,
                ", ".join(
                    f"{m.label}={decisions[:, i].mean():.3f}" for i, m in enumerate(config.methods)
                ),
                time.perf_counter() - started,
            )
    finally:
        if executor is not None:
            executor.shutdown()
    return table


def run_experiments(configs: Sequence[ExperimentConfig], workers: int = HARNESS["workers"]) -> PowerTable:
    """Run several panels into one table."""
    table = PowerTable()
    for config in configs:
        table.extend(run_experiment(config, workers))
    return table
