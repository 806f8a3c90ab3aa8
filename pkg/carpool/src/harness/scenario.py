# -*- coding: utf-8 -*-
"""
@file scenario.py
@brief Scenario type and its YAML file format.
@details
A scenario file is one YAML mapping:

    label: worked-example
    seed: 7            # optional
    driver: d          # optional, defaults to "d"
    params: {pr_l, pr_t, rho, alpha, beta, epsilon}
    passengers:
      - {id, distance_km, expected_time_min, theta, omega}

load_scenario distinguishes three failure kinds: ConfigFileFormatError (YAML
does not parse), ScenarioSchemaError (wrong shape or missing field) and
InvariantViolationError (a domain constraint such as C4 is broken).
Numbers written as YAML strings, e.g. `1e-3` without a dot, are read as floats.
save_scenario writes the canonical form, so save(load(f)) is byte-stable.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import yaml

from src.config import ConfigLoader
from src.harness.output import HarnessError, open_output
from src.model import Driver, InvariantViolationError, Passenger, PricingParams, Travel

logger = logging.getLogger(__name__)

DEFAULT_MAX_PASSENGERS = 64

PARAM_FIELDS = ("pr_l", "pr_t", "rho", "alpha", "beta", "epsilon")
PASSENGER_FIELDS = ("id", "distance_km", "expected_time_min", "theta", "omega")
SCENARIO_FIELDS = ("label", "seed", "driver", "params", "passengers")


class ScenarioSchemaError(HarnessError):
    """
    @brief Raised when a scenario document does not match the schema.
    @details Attribute field holds the dotted path of the offending entry.
    """

    def __init__(self, field: str, message: str):
        super().__init__(f"schema error at {field}: {message}")
        self.field = field


@dataclass(frozen=True)
class Scenario:
    """@brief One carpooling instance: tariff, passengers and the driver."""

    params: PricingParams
    passengers: tuple
    driver: Driver = Driver()
    label: str = "scenario"
    seed: Optional[int] = None

    def __post_init__(self):
        passengers = tuple(self.passengers)
        if not passengers:
            raise InvariantViolationError("passengers", "scenario", "a scenario needs at least one passenger")
        seen = set()
        for passenger in passengers:
            if passenger.id in seen:
                raise InvariantViolationError("passengers", "scenario", f"duplicate passenger id {passenger.id}")
            seen.add(passenger.id)
        object.__setattr__(self, "passengers", passengers)

    def check_size(self, max_passengers: int) -> "Scenario":
        if len(self.passengers) > max_passengers:
            raise InvariantViolationError(
                "passengers", "scenario",
                f"{len(self.passengers)} passengers exceed the configured maximum {max_passengers}",
            )
        return self


def _number(data: dict, key: str, path: str) -> float:
    if key not in data:
        raise ScenarioSchemaError(f"{path}.{key}", "missing field")
    value = data[key]
    if isinstance(value, str):
        # YAML 1.1 resolvers leave forms such as 1e-3 as strings
        try:
            number = float(value)
        except ValueError:
            number = math.nan
        if math.isfinite(number):
            return number
    elif not isinstance(value, bool) and isinstance(value, (int, float)):
        return float(value)
    raise ScenarioSchemaError(f"{path}.{key}", f"expected a number, got {value!r}")


def _check_keys(data, allowed, path: str) -> None:
    if not isinstance(data, dict):
        raise ScenarioSchemaError(path, f"expected a mapping, got {type(data).__name__}")
    unknown = sorted(set(data) - set(allowed))
    if unknown:
        raise ScenarioSchemaError(f"{path}.{unknown[0]}", "unknown field")


def scenario_from_dict(data: dict) -> Scenario:
    """
    @brief Validates a parsed document and builds the Scenario.
    @throws ScenarioSchemaError on shape errors.
    @throws InvariantViolationError on domain constraint violations.
    """
    _check_keys(data, SCENARIO_FIELDS, "scenario")

    label = data.get("label")
    if not isinstance(label, str) or not label:
        raise ScenarioSchemaError("label", "expected a non-empty string")

    seed = data.get("seed")
    if seed is not None and (isinstance(seed, bool) or not isinstance(seed, int) or seed < 0):
        raise ScenarioSchemaError("seed", f"expected a nonnegative integer, got {seed!r}")

    driver_id = data.get("driver", "d")
    if not isinstance(driver_id, str):
        raise ScenarioSchemaError("driver", f"expected a string, got {driver_id!r}")

    if "params" not in data:
        raise ScenarioSchemaError("params", "missing field")
    _check_keys(data["params"], PARAM_FIELDS, "params")
    params = PricingParams(**{key: _number(data["params"], key, "params") for key in PARAM_FIELDS})

    entries = data.get("passengers")
    if not isinstance(entries, list) or not entries:
        raise ScenarioSchemaError("passengers", "expected a non-empty list")

    passengers = []
    for index, entry in enumerate(entries):
        path = f"passengers[{index}]"
        _check_keys(entry, PASSENGER_FIELDS, path)
        passenger_id = entry.get("id")
        if not isinstance(passenger_id, str) or not passenger_id:
            raise ScenarioSchemaError(f"{path}.id", f"expected a non-empty string, got {passenger_id!r}")
        passengers.append(
            Passenger(
                id=passenger_id,
                travel=Travel(
                    _number(entry, "distance_km", path),
                    _number(entry, "expected_time_min", path),
                ),
                theta=_number(entry, "theta", path),
                omega=_number(entry, "omega", path),
            )
        )

    return Scenario(
        params=params,
        passengers=tuple(passengers),
        driver=Driver(driver_id),
        label=label,
        seed=seed,
    )


def scenario_to_dict(scenario: Scenario) -> dict:
    """@brief Canonical mapping with a fixed key order."""
    data = {"label": scenario.label}
    if scenario.seed is not None:
        data["seed"] = scenario.seed
    data["driver"] = scenario.driver.id
    data["params"] = {key: getattr(scenario.params, key) for key in PARAM_FIELDS}
    data["passengers"] = [
        {
            "id": p.id,
            "distance_km": p.travel.distance_km,
            "expected_time_min": p.travel.expected_time_min,
            "theta": p.theta,
            "omega": p.omega,
        }
        for p in scenario.passengers
    ]
    return data


def load_scenario(file_path: str, max_passengers: int = DEFAULT_MAX_PASSENGERS) -> Scenario:
    """
    @brief Reads and fully validates a scenario file.
    @throws ConfigFileNotFoundError, ConfigFileFormatError, ScenarioSchemaError,
            InvariantViolationError.
    """
    scenario = scenario_from_dict(ConfigLoader.load_config(file_path)).check_size(max_passengers)
    logger.info("Loaded scenario %s (%d passengers) from %s",
                scenario.label, len(scenario.passengers), file_path)
    return scenario


def dump_scenario(scenario: Scenario) -> str:
    """@brief Canonical YAML text of a scenario."""
    return yaml.safe_dump(
        scenario_to_dict(scenario),
        sort_keys=False,
        default_flow_style=False,
        allow_unicode=True,
    )


def save_scenario(scenario: Scenario, file_path: str) -> None:
    """@brief Writes the canonical YAML form of scenario to file_path."""
    with open_output(file_path) as handle:
        handle.write(dump_scenario(scenario))
    logger.info("Saved scenario %s to %s", scenario.label, file_path)
