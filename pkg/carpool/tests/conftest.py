"""Shared fixtures for the carpool fare engine tests."""

from pathlib import Path

import pytest

from src.harness import Scenario, generate_scenario
from src.model import Passenger, PricingParams, Travel

SCENARIO_DIR = Path(__file__).resolve().parent.parent / "scenarios"


@pytest.fixture
def params():
    """Default tariff: pr_l=2, pr_t=0.5, rho=1.5, alpha=1.8, beta=0.8, epsilon=1.3."""
    return PricingParams(pr_l=2.0, pr_t=0.5, rho=1.5, alpha=1.8, beta=0.8, epsilon=1.3)


@pytest.fixture
def worked_passengers():
    """theta=(10, 20), omega=(2, 1); F = (30, 10) under the default tariff."""
    return (
        Passenger("p1", Travel(10.0, 20.0), theta=10.0, omega=2.0),
        Passenger("p2", Travel(2.5, 10.0), theta=20.0, omega=1.0),
    )


@pytest.fixture
def worked_scenario(params, worked_passengers):
    return Scenario(params=params, passengers=worked_passengers, label="worked-example")


@pytest.fixture
def worked_scenario_path():
    return str(SCENARIO_DIR / "worked_example.yaml")


@pytest.fixture
def random_passengers():
    """Factory: seeded passengers drawn with the default generator ranges."""

    def make(seed: int, n: int) -> tuple:
        return generate_scenario(seed, n).passengers

    return make
