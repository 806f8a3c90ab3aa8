# -*- coding: utf-8 -*-
"""
@file fares.py
@brief Fare and surplus formulas of the carpooling model.
@details
  - base_fare:         F(T) = pr_l * l + pr_t * t
  - surge_fare:        G(T) = rho * F(T)
  - passenger_surplus: U(p) = alpha * F(T) - rho * F(T)
  - driver_surplus:    U(d) = x_d - beta * sum F(T_i), summed over the served set.
    With a single passenger this is x_d - beta * F(T).
All functions are pure.
"""

from src.model.model_types import PricingParams, Travel


def linear_fare(distance_km: float, expected_time_min: float, params: PricingParams) -> float:
    """@brief The raw tariff formula, without Travel validation."""
    return params.pr_l * distance_km + params.pr_t * expected_time_min


def base_fare(travel: Travel, params: PricingParams) -> float:
    """
    @brief Base fare F(T) of a travel.
    @return pr_l * l + pr_t * t, strictly positive for any valid Travel.
    """
    return linear_fare(travel.distance_km, travel.expected_time_min, params)


def surge_fare(travel: Travel, params: PricingParams) -> float:
    """@brief Fare with the price fluctuation coefficient applied, G(T) = rho * F(T)."""
    return params.rho * base_fare(travel, params)


def passenger_surplus(travel: Travel, params: PricingParams) -> float:
    """@brief (alpha - rho) * F(T); nonnegative whenever C4 holds."""
    return (params.alpha - params.rho) * base_fare(travel, params)


def driver_surplus(x_d: float, coalition_fares, params: PricingParams) -> float:
    """
    @brief Driver surplus over the served set.
    @param x_d Driver's actual revenue.
    @param coalition_fares Base fares F(T_i) of the served passengers.
    @return x_d - beta * sum(coalition_fares).
    """
    return x_d - params.beta * sum(coalition_fares)
