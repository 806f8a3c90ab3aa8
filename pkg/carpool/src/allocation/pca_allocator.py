# -*- coding: utf-8 -*-
"""
@file pca_allocator.py
@brief Driver revenue, compensation pool and the PCA allocation.
@details
For a coalition S with base fares F_i:
  driver revenue   x_d     = epsilon * sum F_i
  total collected  G_total = rho * sum F_i
  pool                     = G_total - x_d = (rho - epsilon) * sum F_i
The pool is split by an ISplitRule and the coalition is served in the
impatience-minimizing order sigma*. The baseline allocation keeps the whole
surge fare with the driver and pays no compensation.
"""

import logging
from dataclasses import dataclass, replace

from src.allocation.split_rules import AllocationError, ShapleyProportionalSplit
from src.impatience import (
    EXHAUSTIVE_BOUND,
    SOLVER_SMITH,
    ServiceSequence,
    index_coalition,
    optimal_sequence,
)
from src.model import base_fare

logger = logging.getLogger(__name__)

BASELINE_RULE = "baseline"


class EmptyPoolError(AllocationError):
    """
    @brief Raised when rho <= epsilon leaves nothing to compensate (C5 unsatisfiable).
    """

    def __init__(self, rho: float, epsilon: float):
        super().__init__(
            f"C5 violated: empty compensation pool (rho={rho}, epsilon={epsilon})"
        )
        self.rho = rho
        self.epsilon = epsilon


class PlayerMismatchError(AllocationError):
    """@brief Raised when Shapley players and coalition members differ."""


@dataclass(frozen=True)
class Allocation:
    """
    @brief Outcome of allocating one coalition.
    @details
    x maps passenger id to compensation x_i. passengers holds the coalition S,
    sorted by id; sequence is the sigma* used to serve it.
    """

    x_d: float
    x: dict
    sequence: ServiceSequence
    passengers: tuple
    objective: float
    total_impatience: float
    split_rule: str
    is_baseline: bool = False
    warnings: tuple = ()

    @property
    def coalition(self) -> tuple:
        return tuple(p.id for p in self.passengers)

    @property
    def total_compensation(self) -> float:
        return sum(self.x.values())


def _fares(coalition, params) -> list:
    return [base_fare(p.travel, params) for p in coalition]


def driver_revenue(coalition, params) -> float:
    """@brief x_d = epsilon * sum F(T_i)."""
    return params.epsilon * sum(_fares(coalition, params))


def total_collected(coalition, params) -> float:
    """@brief G_total = rho * sum F(T_i), the sum of surge fares."""
    return params.rho * sum(_fares(coalition, params))


def compensation_pool(coalition, params) -> float:
    """@brief G_total - x_d."""
    return total_collected(coalition, params) - driver_revenue(coalition, params)


def _sorted_members(coalition) -> tuple:
    members = index_coalition(coalition)
    if not members:
        raise AllocationError("Cannot allocate an empty coalition")
    return tuple(members[pid] for pid in sorted(members))


def pca_allocate(coalition, params, shapley, split_rule=None,
                 solver: str = SOLVER_SMITH, bound: int = EXHAUSTIVE_BOUND) -> Allocation:
    """
    @brief PCA allocation: serve in sigma*, pay epsilon * sum F to the driver,
           split the rest of the surge fares by split_rule.
    @param coalition Passengers of S.
    @param params PricingParams.
    @param shapley ShapleyResult over exactly the members of S.
    @param split_rule ISplitRule; Shapley-proportional when None.
    @return Allocation satisfying C1-C5 by construction.
    @throws EmptyPoolError if rho == epsilon.
    @throws PlayerMismatchError if shapley players differ from the coalition.
    @throws NonPositiveShapleyError if a proportional split meets phi_i <= 0.
    """
    members = _sorted_members(coalition)
    ids = set(p.id for p in members)
    if set(shapley.phi) != ids:
        raise PlayerMismatchError(
            f"Shapley players {sorted(shapley.phi)} differ from coalition {sorted(ids)}"
        )

    rule = split_rule or ShapleyProportionalSplit()
    x_d = driver_revenue(members, params)
    pool = total_collected(members, params) - x_d
    if params.rho <= params.epsilon or pool <= 0:
        raise EmptyPoolError(params.rho, params.epsilon)

    x = rule.split(pool, shapley)
    ids_sorted = sorted(ids)
    sequence, impatience = optimal_sequence(members, solver, bound)
    objective = min(x.values()) / impatience

    logger.debug(
        "PCA allocation for %s: x_d=%.6f pool=%.6f objective=%.6f",
        ",".join(ids_sorted), x_d, pool, objective,
    )
    return Allocation(
        x_d=x_d,
        x={pid: x[pid] for pid in ids_sorted},
        sequence=sequence,
        passengers=members,
        objective=objective,
        total_impatience=impatience,
        split_rule=rule.name,
    )


def evaluate_objective(coalition, allocation: Allocation) -> float:
    """
    @brief min_i x_i / I(S, sigma*) for an allocation over coalition S.
    """
    members = _sorted_members(coalition)
    _, impatience = optimal_sequence(members)
    return min(allocation.x[p.id] for p in members) / impatience


def baseline_allocate(coalition, params) -> Allocation:
    """
    @brief Zero-compensation baseline: the driver keeps rho * sum F.
    @details Stands in for the prior surge-pricing scheme the PCA is compared to.
    """
    members = _sorted_members(coalition)
    sequence, impatience = optimal_sequence(members)
    return Allocation(
        x_d=total_collected(members, params),
        x={p.id: 0.0 for p in members},
        sequence=sequence,
        passengers=members,
        objective=0.0,
        total_impatience=impatience,
        split_rule=BASELINE_RULE,
        is_baseline=True,
    )


def with_warnings(allocation: Allocation, *warnings) -> Allocation:
    """@brief Copy of allocation with extra warning entries."""
    return replace(allocation, warnings=allocation.warnings + tuple(warnings))
