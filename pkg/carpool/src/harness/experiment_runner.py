# -*- coding: utf-8 -*-
"""
@file experiment_runner.py
@brief Runs one scenario end to end and builds its Report.
@details
Pipeline: coalition choice -> sigma* -> Shapley values of the impatience
game -> allocation -> C1-C6 audit and individual rationality -> comparison
with the zero-compensation baseline.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from src.allocation import (
    AllocationError,
    EqualSplit,
    ShapleyProportionalSplit,
    audit_constraints,
    baseline_allocate,
    get_split_rule,
    individual_rationality_check,
    pca_allocate,
    select_coalition,
)
from src.coalition import ImpatienceGame, shapley_exact, shapley_montecarlo
from src.config import HarnessSettings
from src.impatience import SOLVER_SMITH, total_impatience
from src.model import base_fare, driver_surplus, passenger_surplus, surge_fare
from src.harness.report import CoalitionRow, DriverRow, PassengerRow, Report

logger = logging.getLogger(__name__)

COALITION_GRAND = "grand"
COALITION_SELECT = "select"
SHAPLEY_EXACT = "exact"
SHAPLEY_MC = "mc"


@dataclass(frozen=True)
class RunOptions:
    """
    @brief Choices for one run.
    @details samples None means the settings' mc_samples.
    """

    split: str = "shapley"
    shapley: str = SHAPLEY_EXACT
    samples: Optional[int] = None
    seed: int = 0
    coalition: str = COALITION_GRAND
    baseline: bool = False
    solver: str = SOLVER_SMITH

    def __post_init__(self):
        get_split_rule(self.split)
        if self.shapley not in (SHAPLEY_EXACT, SHAPLEY_MC):
            raise ValueError(f"Unknown Shapley method: {self.shapley}")
        if self.coalition not in (COALITION_GRAND, COALITION_SELECT):
            raise ValueError(f"Unknown coalition mode: {self.coalition}")
        if self.samples is not None and self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples}")


def shapley_solver(options: RunOptions, settings: HarnessSettings):
    """@brief Callable(game) -> ShapleyResult for the chosen method."""
    if options.shapley == SHAPLEY_EXACT:
        return lambda game: shapley_exact(game, settings.shapley_exact_max)

    samples = options.samples or settings.mc_samples
    return lambda game: shapley_montecarlo(game, samples, options.seed, settings.mc_antithetic)


def _alternate_objective(members, params, shapley, split: str) -> Optional[float]:
    other = EqualSplit() if split == ShapleyProportionalSplit.name else ShapleyProportionalSplit()
    try:
        return pca_allocate(members, params, shapley, other).objective
    except AllocationError as e:
        logger.warning("Alternate split %s not computable: %s", other.name, e)
        return None


def run(scenario, options: RunOptions = None, settings: HarnessSettings = None) -> Report:
    """
    @brief Executes the full pipeline on scenario.
    @return Report with rows, allocation, baseline and audits.
    @throws AllocationError (e.g. EmptyPoolError when rho == epsilon).
    @throws GameTooLargeError when exact Shapley is asked for too many players.
    """
    options = options or RunOptions()
    settings = settings or HarnessSettings()
    params = scenario.params
    split_rule = get_split_rule(options.split)
    solve_shapley = shapley_solver(options, settings)
    bound = settings.exhaustive_bound

    game = ImpatienceGame(scenario.passengers, solver=options.solver, bound=bound)
    if options.coalition == COALITION_SELECT:
        chosen, allocation = select_coalition(
            scenario.passengers, params, split_rule, solve_shapley,
            settings.coalition_search_max, options.solver, bound,
        )
        game = game.subgame(chosen)
        shapley = solve_shapley(game)
    else:
        shapley = solve_shapley(game)
        allocation = pca_allocate(game.passengers, params, shapley, split_rule, options.solver, bound)

    members = allocation.passengers
    baseline = baseline_allocate(members, params)
    if options.baseline:
        allocation = baseline
        alt_objective = None
    else:
        alt_objective = _alternate_objective(members, params, shapley, options.split)

    audit = audit_constraints(allocation, params, bound)
    rationality = individual_rationality_check(members, allocation, params)
    breakdown = total_impatience(members, allocation.sequence)

    rows = []
    for passenger in members:
        fare = base_fare(passenger.travel, params)
        surge = surge_fare(passenger.travel, params)
        x_i = allocation.x[passenger.id]
        rows.append(PassengerRow(
            passenger_id=passenger.id,
            F=fare,
            G=surge,
            phi=shapley.phi[passenger.id],
            x_i=x_i,
            net_payment=surge - x_i,
            impatience=breakdown.per_passenger[passenger.id],
            payment_reduction_pct=x_i / surge * 100.0,
            solo_payment=surge,
            surplus=passenger_surplus(passenger.travel, params) + x_i,
        ))

    fares = [row.F for row in rows]
    driver = DriverRow(
        x_d=allocation.x_d,
        baseline_revenue=baseline.x_d,
        revenue_loss_pct=(baseline.x_d - allocation.x_d) / baseline.x_d * 100.0,
        driver_surplus=driver_surplus(allocation.x_d, fares, params),
    )

    warnings = list(allocation.warnings)
    if not rationality.all_passed:
        warnings.append("individual rationality violated: " + " ".join(rationality.violations))
    coalition = CoalitionRow(
        members=allocation.coalition,
        sequence=allocation.sequence.order,
        total_impatience=breakdown.total,
        objective=allocation.objective,
        alt_objective=alt_objective,
        audits_passed=audit.summary(),
        warnings=tuple(warnings),
    )

    logger.info(
        "Run %s: |S|=%d x_d=%.6g objective=%.6g audits=%s",
        scenario.label, len(members), allocation.x_d, allocation.objective, audit.summary(),
    )
    return Report(
        scenario=scenario.label,
        passengers=tuple(rows),
        driver=driver,
        coalition=coalition,
        allocation=allocation,
        baseline=baseline,
        audit=audit,
        rationality=rationality,
    )
