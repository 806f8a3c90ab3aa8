# -*- coding: utf-8 -*-
"""
@file scenario_generator.py
@brief Seeded random scenarios.
@details
All randomness comes from numpy's PCG64 bit generator seeded with one
64-bit integer. Passengers are drawn in id order and, per passenger, in the
fixed field order distance_km, expected_time_min, theta, omega, each uniform
on its [lo, hi] range. The first k passengers of an n-passenger scenario are
therefore the same for every n >= k under one seed. Ids are
zero-padded to the width of max_passengers so they sort in draw order.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from src.config.settings import DEFAULT_GENERATOR_RANGES, DEFAULT_PRICING
from src.harness.output import HarnessError
from src.harness.scenario import DEFAULT_MAX_PASSENGERS, Scenario
from src.model import Passenger, PricingParams, Travel

logger = logging.getLogger(__name__)

RANGE_FIELDS = ("distance_km", "expected_time_min", "theta", "omega")
SEED_MAX = 2 ** 64 - 1


class GeneratorRangeError(HarnessError):
    """
    @brief Raised for an unusable draw range or passenger count.
    """

    def __init__(self, field: str, message: str):
        super().__init__(f"invalid generator input {field}: {message}")
        self.field = field


@dataclass(frozen=True)
class GeneratorRanges:
    """
    @brief Uniform [lo, hi] ranges for generated passengers.
    @details Defaults are implementer choices: l in [1, 20] km, t in [5, 40] min,
    theta in [5, 30] min, omega in [0.1, 2.0] money per minute.
    """

    distance_km: tuple = DEFAULT_GENERATOR_RANGES["distance_km"]
    expected_time_min: tuple = DEFAULT_GENERATOR_RANGES["expected_time_min"]
    theta: tuple = DEFAULT_GENERATOR_RANGES["theta"]
    omega: tuple = DEFAULT_GENERATOR_RANGES["omega"]

    def __post_init__(self):
        for name in RANGE_FIELDS:
            bounds = getattr(self, name)
            try:
                lo, hi = (float(b) for b in bounds)
            except (TypeError, ValueError):
                raise GeneratorRangeError(name, f"expected [lo, hi], got {bounds!r}")
            if not (math.isfinite(lo) and math.isfinite(hi)):
                raise GeneratorRangeError(name, "bounds must be finite")
            if lo > hi:
                raise GeneratorRangeError(name, f"lo {lo} > hi {hi}")
            object.__setattr__(self, name, (lo, hi))

        if self.distance_km[0] < 0:
            raise GeneratorRangeError("distance_km", "lower bound must be >= 0")
        if self.expected_time_min[0] < 0:
            raise GeneratorRangeError("expected_time_min", "lower bound must be >= 0")
        if self.distance_km[0] == 0 and self.expected_time_min[0] == 0:
            raise GeneratorRangeError(
                "distance_km", "distance_km or expected_time_min needs a lower bound > 0"
            )
        if self.theta[0] <= 0:
            raise GeneratorRangeError("theta", "lower bound must be > 0")
        if self.omega[0] <= 0:
            raise GeneratorRangeError("omega", "lower bound must be > 0")

    @classmethod
    def from_settings(cls, settings) -> "GeneratorRanges":
        return cls(**{name: settings.generator_ranges[name] for name in RANGE_FIELDS})


def default_params(settings=None) -> PricingParams:
    """@brief PricingParams from the settings' Pricing section."""
    pricing = settings.pricing if settings is not None else DEFAULT_PRICING
    return PricingParams(**pricing)


def generate_scenario(seed: int, n_passengers: int, ranges: GeneratorRanges = None,
                      params: PricingParams = None, label: str = None,
                      max_passengers: int = DEFAULT_MAX_PASSENGERS) -> Scenario:
    """
    @brief Draws a scenario deterministically from (seed, n_passengers, ranges).
    @param seed Nonnegative 64-bit seed.
    @param n_passengers Number of passengers, 1..max_passengers.
    @param ranges GeneratorRanges; defaults when None.
    @param params PricingParams; the default tariff when None.
    @param label Scenario label; derived from seed and size when None.
    @throws GeneratorRangeError for a bad count or seed.
    """
    if isinstance(n_passengers, bool) or not isinstance(n_passengers, int) or n_passengers < 1:
        raise GeneratorRangeError("n_passengers", f"must be a positive integer, got {n_passengers!r}")
    if n_passengers > max_passengers:
        raise GeneratorRangeError(
            "n_passengers", f"{n_passengers} exceeds the configured maximum {max_passengers}"
        )
    if isinstance(seed, bool) or not isinstance(seed, int) or not 0 <= seed <= SEED_MAX:
        raise GeneratorRangeError("seed", f"must be an integer in [0, 2^64), got {seed!r}")

    ranges = ranges or GeneratorRanges()
    params = params or default_params()
    rng = np.random.Generator(np.random.PCG64(seed))

    width = len(str(max_passengers))
    passengers = []
    for k in range(1, n_passengers + 1):
        draws = {name: float(rng.uniform(*getattr(ranges, name))) for name in RANGE_FIELDS}
        passengers.append(
            Passenger(
                id=f"p{k:0{width}d}",
                travel=Travel(draws["distance_km"], draws["expected_time_min"]),
                theta=draws["theta"],
                omega=draws["omega"],
            )
        )

    scenario = Scenario(
        params=params,
        passengers=tuple(passengers),
        label=label or f"generated-s{seed}-n{n_passengers}",
        seed=seed,
    )
    logger.debug("Generated scenario %s", scenario.label)
    return scenario
