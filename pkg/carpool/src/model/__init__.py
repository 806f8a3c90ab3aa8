# carpool/src/model/__init__.py

from .model_types import (
    Driver,
    InvariantViolationError,
    ModelError,
    Passenger,
    PricingParams,
    Travel,
)
from .fares import (
    base_fare,
    driver_surplus,
    linear_fare,
    passenger_surplus,
    surge_fare,
)

__all__ = [
    "Driver",
    "InvariantViolationError",
    "ModelError",
    "Passenger",
    "PricingParams",
    "Travel",
    "base_fare",
    "driver_surplus",
    "linear_fare",
    "passenger_surplus",
    "surge_fare",
]
