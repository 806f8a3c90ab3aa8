# -*- coding: utf-8 -*-
"""
@file model_types.py
@brief Immutable domain types for the single-taxicab carpooling model.
@details
Defines the tariff bundle, a passenger's travel, the passenger and the driver.
All types validate themselves at construction and raise InvariantViolationError
naming the offending field and the broken constraint.
"""

import math
from dataclasses import dataclass


class ModelError(Exception):
    """Base exception for the fare model."""


class InvariantViolationError(ModelError):
    """
    @brief Raised when a domain value breaks one of its invariants.
    @details
    Attributes:
      - field: name of the offending field (e.g. "rho").
      - constraint: short constraint tag (e.g. "C4").
    """

    def __init__(self, field: str, constraint: str, message: str):
        super().__init__(f"{constraint} violated: {message}")
        self.field = field
        self.constraint = constraint


def _require_finite(field: str, value: float) -> float:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise InvariantViolationError(field, "type", f"{field} must be a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise InvariantViolationError(field, "finite", f"{field} must be finite, got {value}")
    return value


@dataclass(frozen=True)
class PricingParams:
    """
    @brief Tariff and coefficient bundle.
    @details
    pr_l is money per kilometer, pr_t money per minute. rho is the surge
    (price fluctuation) coefficient, alpha the willingness-to-pay coefficient,
    beta the driver's least-expected-revenue coefficient and epsilon the
    incentive coefficient that sets the driver's actual revenue.
    """

    pr_l: float
    pr_t: float
    rho: float
    alpha: float
    beta: float
    epsilon: float

    def __post_init__(self):
        for name in ("pr_l", "pr_t", "rho", "alpha", "beta", "epsilon"):
            object.__setattr__(self, name, _require_finite(name, getattr(self, name)))

        if self.pr_l < 0:
            raise InvariantViolationError("pr_l", "tariff", "pr_l < 0")
        if self.pr_t < 0:
            raise InvariantViolationError("pr_t", "tariff", "pr_t < 0")
        if self.pr_l == 0 and self.pr_t == 0:
            raise InvariantViolationError("pr_l", "tariff", "pr_l and pr_t are both zero")
        if self.beta <= 0:
            raise InvariantViolationError("beta", "C4", "beta <= 0")
        if self.beta > self.rho:
            raise InvariantViolationError("beta", "C4", "beta > rho")
        if self.rho > self.alpha:
            raise InvariantViolationError("rho", "C4", "rho > alpha")
        if self.epsilon <= self.beta:
            raise InvariantViolationError("epsilon", "incentive", "epsilon <= beta")
        if self.epsilon > self.rho:
            raise InvariantViolationError("epsilon", "incentive", "epsilon > rho")


@dataclass(frozen=True)
class Travel:
    """@brief A passenger's travel: distance l_i in km and expected time t_i in minutes."""

    distance_km: float
    expected_time_min: float

    def __post_init__(self):
        distance = _require_finite("distance_km", self.distance_km)
        duration = _require_finite("expected_time_min", self.expected_time_min)
        if distance < 0:
            raise InvariantViolationError("distance_km", "travel", "distance_km < 0")
        if duration < 0:
            raise InvariantViolationError("expected_time_min", "travel", "expected_time_min < 0")
        if distance == 0 and duration == 0:
            # zero fare, C5 cannot hold for this rider
            raise InvariantViolationError(
                "distance_km", "travel", "distance_km and expected_time_min are both zero"
            )
        object.__setattr__(self, "distance_km", distance)
        object.__setattr__(self, "expected_time_min", duration)


@dataclass(frozen=True)
class Passenger:
    """
    @brief A rider p_i.
    @details
    theta is the expected sojourn time in minutes, omega the expected
    compensation per minute of delay.
    """

    id: str
    travel: Travel
    theta: float
    omega: float

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise InvariantViolationError("id", "identity", f"passenger id must be a non-empty string, got {self.id!r}")
        if not isinstance(self.travel, Travel):
            raise InvariantViolationError("travel", "type", f"travel of {self.id} must be a Travel")
        theta = _require_finite("theta", self.theta)
        omega = _require_finite("omega", self.omega)
        if theta <= 0:
            raise InvariantViolationError("theta", "sojourn", f"theta of {self.id} must be > 0")
        if omega <= 0:
            raise InvariantViolationError("omega", "compensation rate", f"omega of {self.id} must be > 0")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "omega", omega)

    @property
    def ratio(self) -> float:
        """Sojourn time per unit of delay compensation, theta / omega."""
        return self.theta / self.omega


@dataclass(frozen=True)
class Driver:
    """@brief The single driver d of a scenario."""

    id: str = "d"

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise InvariantViolationError("driver", "identity", f"driver id must be a non-empty string, got {self.id!r}")
