# -*- coding: utf-8 -*-
"""
@file sweep.py
@brief Grid sweeps over tariff coefficients, passenger count and seed.
@details
The grid is the cartesian product of the listed values, expanded in the fixed
key order of SWEEP_KEYS. Each point runs independently; a failing point is
recorded as an error row and the sweep continues. Rows are streamed to the
output file in grid order even when points are evaluated concurrently.
"""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace

import pandas as pd

from src.allocation import AllocationError
from src.coalition import GameError
from src.config import ConfigLoader, HarnessSettings
from src.impatience import SequenceError
from src.model import ModelError
from src.harness.experiment_runner import RunOptions, run
from src.harness.output import HarnessError, open_output
from src.harness.report import write_frame
from src.harness.scenario_generator import GeneratorRanges, generate_scenario

logger = logging.getLogger(__name__)

PARAM_KEYS = ("rho", "epsilon", "alpha", "beta")
SWEEP_KEYS = PARAM_KEYS + ("n_passengers", "seed")

SWEEP_COLUMNS = (
    "grid_point", "rho", "epsilon", "alpha", "beta", "n_passengers", "seed",
    "status", "error", "members", "total_impatience", "objective", "x_d",
    "baseline_revenue", "revenue_loss_pct", "mean_payment_reduction_pct",
    "driver_surplus", "audits_passed",
)

STATUS_OK = "ok"
STATUS_ERROR = "error"

# Failures recorded per row instead of aborting the sweep.
POINT_ERRORS = (ModelError, SequenceError, GameError, AllocationError, HarnessError)


def expand_grid(grid: dict) -> list:
    """
    @brief Cartesian product of grid values in SWEEP_KEYS order.
    @param grid Mapping key -> list of values (a scalar counts as a one-element list).
    @return List of point dicts.
    @throws HarnessError for unknown keys or empty value lists.
    """
    unknown = sorted(set(grid) - set(SWEEP_KEYS))
    if unknown:
        raise HarnessError(f"Unknown sweep parameter {unknown[0]}; choose from {', '.join(SWEEP_KEYS)}")

    keys = [key for key in SWEEP_KEYS if key in grid]
    axes = []
    for key in keys:
        values = grid[key] if isinstance(grid[key], (list, tuple)) else [grid[key]]
        if not values:
            raise HarnessError(f"Sweep parameter {key} has no values")
        axes.append(values)
    return [dict(zip(keys, combo)) for combo in itertools.product(*axes)]


def load_grid(file_path: str) -> dict:
    """@brief Reads a grid YAML file; the grid is the `grid` mapping or the whole document."""
    document = ConfigLoader.load_config(file_path)
    grid = document.get("grid", document)
    if not isinstance(grid, dict):
        raise HarnessError(f"Grid in {file_path} must be a mapping")
    return grid


def _grid_float(key: str, value) -> float:
    if isinstance(value, bool):
        raise HarnessError(f"Sweep value for {key} must be a number, got {value!r}")
    try:
        return float(value)
    except (TypeError, ValueError):
        raise HarnessError(f"Sweep value for {key} must be a number, got {value!r}")


def _grid_int(key: str, value) -> int:
    number = _grid_float(key, value)
    if not number.is_integer():
        raise HarnessError(f"Sweep value for {key} must be an integer, got {value!r}")
    return int(number)


def point_scenario(base, point: dict, ranges: GeneratorRanges, max_passengers: int):
    """
    @brief Scenario for one grid point.
    @details Coefficient keys replace the base tariff. When n_passengers or seed
    is swept, passengers are regenerated from that seed, else the base
    passengers are kept.
    @throws HarnessError for a grid value that is not a number.
    """
    overrides = {key: _grid_float(key, point[key]) for key in PARAM_KEYS if key in point}
    params = replace(base.params, **overrides)

    if "n_passengers" in point or "seed" in point:
        seed = point.get("seed", base.seed if base.seed is not None else 0)
        n_passengers = point.get("n_passengers", len(base.passengers))
        return generate_scenario(
            _grid_int("seed", seed), _grid_int("n_passengers", n_passengers),
            ranges, params, base.label, max_passengers,
        )
    return replace(base, params=params)


def _summary_row(index: int, point: dict, base, scenario=None, report=None, error=None) -> dict:
    if scenario is not None:
        coefficients = {key: getattr(scenario.params, key) for key in PARAM_KEYS}
    else:
        coefficients = {key: point.get(key, getattr(base.params, key)) for key in PARAM_KEYS}
    row = {
        "grid_point": index,
        **coefficients,
        "n_passengers": len(scenario.passengers) if scenario is not None else point.get("n_passengers"),
        "seed": scenario.seed if scenario is not None else point.get("seed", base.seed),
        "status": STATUS_OK if error is None else STATUS_ERROR,
        "error": "" if error is None else f"{type(error).__name__}: {error}",
    }
    if report is not None:
        row.update({
            "members": " ".join(report.coalition.members),
            "total_impatience": report.coalition.total_impatience,
            "objective": report.coalition.objective,
            "x_d": report.driver.x_d,
            "baseline_revenue": report.driver.baseline_revenue,
            "revenue_loss_pct": report.driver.revenue_loss_pct,
            "mean_payment_reduction_pct": report.mean_payment_reduction_pct,
            "driver_surplus": report.driver.driver_surplus,
            "audits_passed": report.coalition.audits_passed,
        })
    return row


def evaluate_point(index: int, point: dict, base, options: RunOptions,
                   settings: HarnessSettings, ranges: GeneratorRanges) -> dict:
    """@brief Runs one grid point; errors become an error row."""
    scenario = None
    try:
        scenario = point_scenario(base, point, ranges, settings.max_passengers)
        report = run(scenario, options, settings)
    except POINT_ERRORS as e:
        logger.warning("Sweep point %d %s failed: %s", index, point, e)
        return _summary_row(index, point, base, scenario, error=e)
    logger.info("Sweep point %d %s done", index, point)
    return _summary_row(index, point, base, scenario, report)


def sweep(grid: dict, base_scenario, output_path: str, options: RunOptions = None,
          settings: HarnessSettings = None, workers: int = 1) -> pd.DataFrame:
    """
    @brief Runs every grid point and streams one summary row per point.
    @param grid Mapping over SWEEP_KEYS.
    @param base_scenario Scenario providing defaults for unswept values.
    @param output_path CSV file receiving the rows.
    @param workers Concurrent points; rows are still written in grid order.
    @return The sweep table.
    @throws OutputPathError if output_path cannot be written.
    """
    options = options or RunOptions()
    settings = settings or HarnessSettings()
    ranges = GeneratorRanges.from_settings(settings)
    points = expand_grid(grid)
    logger.info("Sweeping %d grid points with %d worker(s)", len(points), workers)

    rows = []
    with open_output(output_path) as handle:
        def emit(row):
            write_frame(pd.DataFrame([row], columns=list(SWEEP_COLUMNS)), handle, header=not rows)
            handle.flush()
            rows.append(row)

        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                for row in pool.map(
                    lambda item: evaluate_point(item[0], item[1], base_scenario, options, settings, ranges),
                    enumerate(points),
                ):
                    emit(row)
        else:
            for index, point in enumerate(points):
                emit(evaluate_point(index, point, base_scenario, options, settings, ranges))

    return pd.DataFrame(rows, columns=list(SWEEP_COLUMNS))
