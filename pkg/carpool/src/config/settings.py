# -*- coding: utf-8 -*-
"""
@file settings.py
@brief Engine bounds and harness defaults loaded from `config/harness.yaml`.
@details
Every key is optional. Missing keys fall back to the DEFAULT_* constants below,
so a partial settings file only overrides what it names.
"""

import os
import logging
from dataclasses import dataclass, field

from src.config.config_loader import ConfigLoader, ConfigFileNotFoundError

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"

DEFAULT_EXHAUSTIVE_BOUND = 9
DEFAULT_SHAPLEY_EXACT_MAX = 12
DEFAULT_COALITION_SEARCH_MAX = 12
DEFAULT_MAX_PASSENGERS = 64
DEFAULT_MC_SAMPLES = 10_000
DEFAULT_MC_ANTITHETIC = True
DEFAULT_LOG_LEVEL = "INFO"

DEFAULT_GENERATOR_RANGES = {
    "distance_km": (1.0, 20.0),
    "expected_time_min": (5.0, 40.0),
    "theta": (5.0, 30.0),
    "omega": (0.1, 2.0),
}

DEFAULT_PRICING = {
    "pr_l": 2.0,
    "pr_t": 0.5,
    "rho": 1.5,
    "alpha": 1.8,
    "beta": 0.8,
    "epsilon": 1.3,
}

DEFAULT_SETTINGS_PATH = os.path.join(
    os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))),
    "config",
    "harness.yaml",
)


@dataclass(frozen=True)
class HarnessSettings:
    """
    @brief Resolved settings for one harness session.
    """

    exhaustive_bound: int = DEFAULT_EXHAUSTIVE_BOUND
    shapley_exact_max: int = DEFAULT_SHAPLEY_EXACT_MAX
    coalition_search_max: int = DEFAULT_COALITION_SEARCH_MAX
    max_passengers: int = DEFAULT_MAX_PASSENGERS
    mc_samples: int = DEFAULT_MC_SAMPLES
    mc_antithetic: bool = DEFAULT_MC_ANTITHETIC
    log_level: str = DEFAULT_LOG_LEVEL
    generator_ranges: dict = field(default_factory=lambda: dict(DEFAULT_GENERATOR_RANGES))
    pricing: dict = field(default_factory=lambda: dict(DEFAULT_PRICING))


def settings_from_dict(config: dict) -> HarnessSettings:
    """
    @brief Builds HarnessSettings from a parsed settings document.
    @param config Mapping with optional `Harness`, `Generator` and `Pricing` sections.
    @return HarnessSettings with defaults filled in.
    """
    harness = config.get("Harness") or {}
    generator = config.get("Generator") or {}
    pricing = config.get("Pricing") or {}

    ranges = dict(DEFAULT_GENERATOR_RANGES)
    for key, bounds in generator.items():
        lo, hi = bounds
        ranges[key] = (float(lo), float(hi))

    tariff = dict(DEFAULT_PRICING)
    tariff.update({key: float(value) for key, value in pricing.items()})

    return HarnessSettings(
        exhaustive_bound=int(harness.get("exhaustive_bound", DEFAULT_EXHAUSTIVE_BOUND)),
        shapley_exact_max=int(harness.get("shapley_exact_max", DEFAULT_SHAPLEY_EXACT_MAX)),
        coalition_search_max=int(
            harness.get("coalition_search_max", DEFAULT_COALITION_SEARCH_MAX)
        ),
        max_passengers=int(harness.get("max_passengers", DEFAULT_MAX_PASSENGERS)),
        mc_samples=int(harness.get("mc_samples", DEFAULT_MC_SAMPLES)),
        mc_antithetic=bool(harness.get("mc_antithetic", DEFAULT_MC_ANTITHETIC)),
        log_level=str(harness.get("log_level", DEFAULT_LOG_LEVEL)).upper(),
        generator_ranges=ranges,
        pricing=tariff,
    )


def load_settings(file_path: str = None) -> HarnessSettings:
    """
    @brief Loads harness settings from YAML.
    @param file_path Explicit settings file. When omitted, `config/harness.yaml`
           is used if present and built-in defaults otherwise.
    @return HarnessSettings.
    @throws ConfigFileNotFoundError if an explicit path does not exist.
    @throws ConfigFileFormatError if the file is not a valid YAML mapping.
    """
    if file_path is None:
        try:
            config = ConfigLoader.load_config(DEFAULT_SETTINGS_PATH)
        except ConfigFileNotFoundError:
            logger.info("No settings file at %s, using built-in defaults.", DEFAULT_SETTINGS_PATH)
            return HarnessSettings()
    else:
        config = ConfigLoader.load_config(file_path)

    settings = settings_from_dict(config)
    logger.debug("Loaded settings: %s", settings)
    return settings
