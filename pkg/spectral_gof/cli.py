"""
Command line interface.

Usage:
    gof test --method srpt --null uniform:d=1 --data sample.csv --seed 7
    gof power --config experiments.json --reps 100 --out power.csv
    gof reproduce fig1 --out-dir results/

Exit codes: 0 ran (the decision is in the output), 2 configuration error,
3 data error.
"""

import argparse
import logging
import math
import re
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np

from .config import HARNESS, LOGGING, TEST
from .distributions import get_distribution, parse_spec
from .errors import ConfigError, DataError, InvalidParameterError, RegularizerConstantError
from .procedures import METHODS, THRESHOLDS, MethodConfig, run_method
from .streams import child, generator

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DATA = 3

_DIM_COMMENT = re.compile(r"#\s*dim\s*=\s*(\d+)")

# substreams of the --seed for `gof test`
_NULL_MEAN_STREAM = 0
_NULL_COVARIANCE_STREAM = 1
_METHOD_STREAM = 2


def setup_logging(level: str = LOGGING["level"]):
    """Configure a stderr handler for the package loggers."""
    numeric = logging.getLevelName(level.upper())
    if not isinstance(numeric, int):
        raise ConfigError(f"unknown log level '{level}'")
    logging.basicConfig(level=numeric, format=LOGGING["format"], stream=sys.stderr, force=True)


def read_sample(path) -> np.ndarray:
    """
    Read a sample CSV: one point per row, comma-separated coordinates.

    An optional `# dim=d` comment fixes the dimension and is checked
    against the rows.

    Raises:
        DataError: unreadable, empty, ragged or non-finite data
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc

    declared = None
    rows = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            match = _DIM_COMMENT.match(line)
            if match:
                declared = int(match.group(1))
            continue
        try:
            rows.append([float(v) for v in line.split(",")])
        except ValueError as exc:
            raise DataError(f"{path}:{number}: {exc}") from exc

    if not rows:
        raise DataError(f"{path} holds no points")
    widths = {len(row) for row in rows}
    if len(widths) != 1:
        raise DataError(f"{path}: rows have differing lengths {sorted(widths)}")
    X = np.asarray(rows, dtype=float)
    if declared is not None and X.shape[1] != declared:
        raise DataError(f"{path}: declared dim={declared} but rows have {X.shape[1]} coordinates")
    if not np.all(np.isfinite(X)):
        raise DataError(f"{path} contains non-finite values")
    return X


def _parse_number_list(text: str) -> List[float]:
    return [float(v) for v in text.split(",") if v.strip()]


def _method_from_args(args) -> MethodConfig:
    options = {"name": args.method, "kernel": args.kernel, "regularizer": args.regularizer}
    if args.bandwidths is not None:
        if args.bandwidths in ("auto", "median"):
            options["bandwidths"] = args.bandwidths
        else:
            options["bandwidths"] = _parse_number_list(args.bandwidths)
    if args.lambdas is not None:
        if ":" in args.lambdas:
            lower, upper = args.lambdas.split(":", 1)
            options.update(lambdas="grid", lambda_lower=float(lower), lambda_upper=float(upper))
        else:
            options["lambdas"] = _parse_number_list(args.lambdas)
    if args.permutations is not None:
        options["permutations"] = args.permutations if args.permutations == "auto" else int(args.permutations)
    return MethodConfig.from_dict(options)


def cmd_test(args) -> int:
    try:
        method = _method_from_args(args)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    null_spec = parse_spec(args.null)
    X = read_sample(args.data)
    if X.shape[1] != null_spec.dim:
        raise DataError(f"sample has dimension {X.shape[1]} but the null has d={null_spec.dim}")
    null = get_distribution(null_spec)

    if args.s < 2:
        raise ConfigError(f"--s must be >= 2, got {args.s}")
    if args.m_ratio < 1:
        raise ConfigError(f"--m-ratio must be >= 1, got {args.m_ratio}")
    m = int(math.ceil(args.m_ratio * X.shape[0]))
    X0 = null.sample(m, generator(args.seed, _NULL_MEAN_STREAM))
    Y0 = null.sample(args.s, generator(args.seed, _NULL_COVARIANCE_STREAM))

    logger.info("Running %s on n=%d points (m=%d, s=%d)", method.name, X.shape[0], m, args.s)
    outcome = run_method(
        method, X, X0, Y0, null=null_spec, alpha=args.alpha,
        seed=child(args.seed, _METHOD_STREAM),
    )
    print(outcome.summary())
    if args.verbose and outcome.per_grid_results:
        for cell in outcome.per_grid_results:
            print(
                f"  lambda={cell.lam:.3g} kernel={cell.kernel_id} "
                f"stat={cell.statistic:.6g} crit={cell.critical_value:.6g} "
                f"{'reject' if cell.reject else 'accept'}"
            )
    return EXIT_OK


def _parse_s_grid(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise ConfigError(f"--s-grid must be a comma-separated list of integers: {exc}") from exc


def cmd_power(args) -> int:
    from .harness import PowerTable, load_config, run_experiments

    configs = load_config(args.config)
    if args.reps is not None:
        for config in configs:
            config.repetitions = args.reps
            config.validate()
    table: PowerTable = run_experiments(configs, args.workers)
    if args.out:
        table.write_csv(args.out)
        print(f"Wrote {len(table)} rows to {args.out}")
    else:
        sys.stdout.write(table.to_csv_string())
    return EXIT_OK


def cmd_reproduce(args) -> int:
    from .harness import reproduce

    table, csv_path, plot_path = reproduce(
        args.figure,
        out_dir=args.out_dir,
        reps=args.reps,
        s_grid=_parse_s_grid(args.s_grid),
        workers=args.workers,
        seed=args.seed,
        oracle_threshold=args.oracle_threshold,
    )
    print(f"Wrote {len(table)} rows to {csv_path}")
    print(f"Wrote plot to {plot_path}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gof",
        description="Spectral regularized kernel goodness-of-fit tests",
    )
    parser.add_argument("--log-level", default=LOGGING["level"], help="Logging level (default: %(default)s)")
    sub = parser.add_subparsers(dest="command", required=True)

    test = sub.add_parser("test", help="Test one sample against a null distribution")
    test.add_argument("--method", required=True, choices=METHODS)
    test.add_argument("--null", required=True, help="Null spec, e.g. 'gaussian:d=2'")
    test.add_argument("--data", required=True, help="Sample CSV, one point per row")
    test.add_argument("--kernel", default="gaussian")
    test.add_argument("--regularizer", default="tikhonov")
    test.add_argument("--bandwidths", default=None, help="'auto', 'median' or a comma list")
    test.add_argument("--lambdas", default=None, help="'lo:hi' doubling grid or a comma list")
    test.add_argument("--alpha", type=float, default=TEST["alpha"])
    test.add_argument("--permutations", default=None, help="B, or 'auto'")
    test.add_argument("--s", type=int, default=TEST["covariance_samples"], help="Null covariance-sample size")
    test.add_argument("--m-ratio", type=float, default=TEST["m_ratio"], help="m / n")
    test.add_argument("--seed", type=int, default=None)
    test.add_argument("-v", "--verbose", action="store_true", help="Print every grid cell")
    test.set_defaults(handler=cmd_test)

    power = sub.add_parser("power", help="Run Monte-Carlo power experiments from a config file")
    power.add_argument("--config", required=True, help="JSON experiment file")
    power.add_argument("--reps", type=int, default=None, help="Override repetitions")
    power.add_argument("--out", default=None, help="Output CSV (default: stdout)")
    power.add_argument("--workers", type=int, default=HARNESS["workers"])
    power.set_defaults(handler=cmd_power)

    repro = sub.add_parser("reproduce", help="Run a figure preset and write CSV + plot")
    repro.add_argument("figure", help="Preset id, e.g. fig1")
    repro.add_argument("--out-dir", default=".")
    repro.add_argument("--reps", type=int, default=None)
    repro.add_argument("--s-grid", default=None, help="Comma list of s values")
    repro.add_argument("--workers", type=int, default=HARNESS["workers"])
    repro.add_argument("--seed", type=int, default=None)
    repro.add_argument(
        "--oracle-threshold", choices=THRESHOLDS, default=None, help="Oracle critical value (default: chebyshev)"
    )
    repro.set_defaults(handler=cmd_reproduce)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run the subcommand and map errors to exit codes."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        setup_logging(args.log_level)
        return args.handler(args)
    except DataError as exc:
        logger.error("%s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (ConfigError, InvalidParameterError, RegularizerConstantError) as exc:
        logger.error("%s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


def run():
    sys.exit(main())
