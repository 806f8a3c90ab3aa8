# -*- coding: utf-8 -*-
"""
@file coalition_selector.py
@brief Max-min coalition search: max over S in P of min_i x_i / I(S, sigma*).
@details
Every nonempty subset of the passengers is allocated with pca_allocate and
scored by its objective. Ties go to the larger coalition, then to the
lexicographically smallest sorted id tuple. Beyond the search bound the grand
coalition is allocated instead and the result carries a warning.
"""

import logging

from src.allocation.pca_allocator import pca_allocate, with_warnings
from src.coalition import ImpatienceGame, shapley_exact
from src.impatience import EXHAUSTIVE_BOUND, SOLVER_SMITH, index_coalition

logger = logging.getLogger(__name__)

COALITION_SEARCH_MAX = 12
OBJECTIVE_TIE_TOLERANCE = 1e-12


def _beats(candidate: tuple, incumbent: tuple) -> bool:
    objective, ids = candidate
    best_objective, best_ids = incumbent
    margin = OBJECTIVE_TIE_TOLERANCE * max(1.0, abs(best_objective))
    if objective > best_objective + margin:
        return True
    if objective < best_objective - margin:
        return False
    if len(ids) != len(best_ids):
        return len(ids) > len(best_ids)
    return ids < best_ids


def select_coalition(all_passengers, params, split_rule=None, shapley_fn=None,
                     max_players: int = COALITION_SEARCH_MAX,
                     solver: str = SOLVER_SMITH, bound: int = EXHAUSTIVE_BOUND):
    """
    @brief Finds the coalition maximizing the max-min objective.
    @param all_passengers Passenger set P.
    @param params PricingParams.
    @param split_rule ISplitRule passed through to pca_allocate.
    @param shapley_fn Callable(game) -> ShapleyResult; shapley_exact when None.
    @param max_players Largest |P| searched exhaustively.
    @return (coalition ids tuple, Allocation).
    """
    members = index_coalition(all_passengers)
    players = tuple(sorted(members))
    shapley_fn = shapley_fn or shapley_exact
    game = ImpatienceGame(members.values(), solver=solver, bound=bound)

    if len(players) > max_players:
        logger.warning(
            "Coalition search over %d passengers exceeds bound %d; using the grand coalition",
            len(players), max_players,
        )
        allocation = pca_allocate(
            game.passengers, params, shapley_fn(game), split_rule, solver, bound
        )
        warning = f"coalition search skipped: {len(players)} > {max_players}"
        return players, with_warnings(allocation, warning)

    best = None
    best_allocation = None
    for mask in range(1, 1 << len(players)):
        ids = tuple(p for k, p in enumerate(players) if mask >> k & 1)
        subgame = game.subgame(ids)
        allocation = pca_allocate(
            subgame.passengers, params, shapley_fn(subgame), split_rule, solver, bound
        )
        candidate = (allocation.objective, ids)
        if best is None or _beats(candidate, best):
            best = candidate
            best_allocation = allocation

    logger.info(
        "Selected coalition %s with objective %.6g out of %d candidates",
        " ".join(best[1]), best[0], (1 << len(players)) - 1,
    )
    return best[1], best_allocation
