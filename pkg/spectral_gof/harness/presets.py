"""
Figure presets - the power experiments at desk scale.

Each preset returns the panels of one figure. Sample sizes, B and s are the
full-scale ones; the adaptive grids are coarsened (see DESK_GRID) so
a full figure runs on a workstation. `reps` and `s_grid` override the
repetition count and add per-s variants of the srct / srpt methods;
`oracle_threshold` switches the oracle column between the Chebyshev bound
(default) and a simulated null quantile, which is labelled oracle(simulated).
"""

import dataclasses
from typing import Callable, Dict, List, Optional, Sequence

from ..distributions import DistributionSpec
from ..errors import ConfigError
from ..procedures import MethodConfig
from .experiment import ExperimentConfig

# Coarse grids for the adaptive methods: |Lambda| x |W| = 4 x 5 cells
DESK_GRID = {
    "lambdas": [1e-4, 1e-3, 1e-2, 1e-1],
    "w_lower": 0.25,
    "w_upper": 4.0,
}


def _adaptive(name: str, **extra) -> MethodConfig:
    params = dict(DESK_GRID, **extra)
    if name == "srpt":
        params.setdefault("permutations", "auto")
    return MethodConfig(name=name, bandwidths="auto", **params)


def _kernel_methods() -> List[MethodConfig]:
    return [
        _adaptive("srpt"),
        _adaptive("srct"),
        MethodConfig(name="mmd", bandwidths="median"),
        MethodConfig(name="energy-perm"),
    ]


class FigurePresets:
    """Factory for the power-figure experiments."""

    @staticmethod
    def fig1() -> List[ExperimentConfig]:
        """Periodic spline kernel, uniform null vs perturbed uniform: oracle vs SRPT."""
        spline = {"kernel": "spline", "lambdas": 1e-3}
        return [
            ExperimentConfig(
                null=DistributionSpec("uniform_cube", 1),
                alternative=DistributionSpec("perturbed_uniform", 1, {"P": 1}),
                methods=[
                    MethodConfig(name="oracle", **spline),
                    MethodConfig(name="srpt", label="srpt(m=n)", m_ratio=1, **spline),
                    MethodConfig(name="srpt", label="srpt(m=3n)", m_ratio=3, **spline),
                ],
                n=200,
                s=100,
                sweep_param="P",
                sweep_values=[1, 2, 3, 4, 5, 6],
                panel="spline d=1",
            )
        ]

    @staticmethod
    def fig2() -> List[ExperimentConfig]:
        """Gaussian mean shift, d in {1, 5, 10}."""
        return [
            ExperimentConfig(
                null=DistributionSpec("gaussian", d),
                alternative=DistributionSpec("gaussian", d, {"shift": 0.0}),
                methods=_kernel_methods(),
                n=200,
                sweep_param="shift",
                sweep_values=[0.0, 0.1, 0.2, 0.3, 0.4, 0.5],
                panel=f"shift d={d}",
            )
            for d in (1, 5, 10)
        ]

    @staticmethod
    def fig3() -> List[ExperimentConfig]:
        """Gaussian covariance scale, d in {1, 5, 10}."""
        return [
            ExperimentConfig(
                null=DistributionSpec("gaussian", d),
                alternative=DistributionSpec("gaussian", d, {"scale": 1.0}),
                methods=_kernel_methods(),
                n=200,
                sweep_param="scale",
                sweep_values=[1.0, 1.25, 1.5, 1.75, 2.0],
                panel=f"scale d={d}",
            )
            for d in (1, 5, 10)
        ]

    @staticmethod
    def fig4() -> List[ExperimentConfig]:
        """Perturbed uniform, d=1 (n=500) and d=2 (n=2000)."""
        return [
            ExperimentConfig(
                null=DistributionSpec("uniform_cube", d),
                alternative=DistributionSpec("perturbed_uniform", d, {"P": 0}),
                methods=_kernel_methods(),
                n=n,
                sweep_param="P",
                sweep_values=[0, 1, 2, 3, 4, 5, 6],
                panel=f"perturbed d={d}",
            )
            for d, n in ((1, 500), (2, 2000))
        ]

    @staticmethod
    def fig5() -> List[ExperimentConfig]:
        """von Mises-Fisher vs uniform on S^2."""
        return [
            ExperimentConfig(
                null=DistributionSpec("sphere_uniform", 3),
                alternative=DistributionSpec("vmf", 3, {"kappa": 0.0}),
                methods=_kernel_methods(),
                n=500,
                sweep_param="kappa",
                sweep_values=[0.0, 0.05, 0.1, 0.15, 0.2, 0.25],
                panel="vmf d=3",
            )
        ]

    @staticmethod
    def fig6() -> List[ExperimentConfig]:
        """Equal-weight Watson mixture vs uniform on S^2."""
        return [
            ExperimentConfig(
                null=DistributionSpec("sphere_uniform", 3),
                alternative=DistributionSpec("watson_mixture", 3, {"kappa": 0.0}),
                methods=_kernel_methods(),
                n=500,
                sweep_param="kappa",
                sweep_values=[0.0, 0.5, 1.0, 1.5, 2.0, 2.5],
                panel="watson d=3",
            )
        ]


FIGURES: Dict[str, Callable[[], List[ExperimentConfig]]] = {
    "fig1": FigurePresets.fig1,
    "fig2": FigurePresets.fig2,
    "fig3": FigurePresets.fig3,
    "fig4": FigurePresets.fig4,
    "fig5": FigurePresets.fig5,
    "fig6": FigurePresets.fig6,
}


def _with_oracle_threshold(methods: Sequence[MethodConfig], threshold: str) -> List[MethodConfig]:
    return [
        dataclasses.replace(method, threshold=threshold, label=None) if method.name == "oracle" else method
        for method in methods
    ]


def _with_s_grid(methods: Sequence[MethodConfig], s_grid: Sequence[int]) -> List[MethodConfig]:
    out = []
    for method in methods:
        if method.name not in ("srct", "srpt"):
            out.append(method)
            continue
        for s in s_grid:
            label = f"{method.label}(s={int(s)})"
            out.append(dataclasses.replace(method, s=int(s), label=label))
    return out


def get_preset(
    figure_id: str,
    reps: Optional[int] = None,
    s_grid: Optional[Sequence[int]] = None,
    seed: Optional[int] = None,
    oracle_threshold: Optional[str] = None,
) -> List[ExperimentConfig]:
    """
    Panels of a figure preset.

    Raises:
        ConfigError: unknown figure id
    """
    if figure_id not in FIGURES:
        raise ConfigError(f"unknown figure '{figure_id}' (known: {', '.join(FIGURES)})")
    panels = FIGURES[figure_id]()
    updates = {}
    if reps is not None:
        updates["repetitions"] = int(reps)
    if seed is not None:
        updates["seed"] = int(seed)
    result = []
    for panel in panels:
        changes = dict(updates)
        methods = panel.methods
        if oracle_threshold is not None:
            methods = _with_oracle_threshold(methods, oracle_threshold)
        if s_grid:
            methods = _with_s_grid(methods, s_grid)
        if methods is not panel.methods:
            changes["methods"] = methods
        result.append(dataclasses.replace(panel, **changes) if changes else panel)
    return result
