# -*- coding: utf-8 -*-
"""
@file shapley.py
@brief Exact and Monte-Carlo Shapley values of a coalition game.
@details
Exact: phi_i = sum over T in S\\{i} of |T|!(|S|-|T|-1)!/|S|! * [v(T + i) - v(T)],
evaluated over a bitmask table of all 2^|S| subset values.
Monte Carlo: averages marginal contributions over player orderings drawn from
numpy's PCG64 generator seeded with the caller's seed. With antithetic pairing
every drawn ordering is followed by its reverse.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from src.coalition.games import GameError, GameTooLargeError

logger = logging.getLogger(__name__)

SHAPLEY_EXACT_MAX = 12

METHOD_EXACT = "exact"
METHOD_MONTE_CARLO = "monte_carlo"


@dataclass(frozen=True)
class ShapleyResult:
    """
    @brief Shapley values phi keyed by player id.
    @details samples is 0 and seed None for exact results; std_error is 0 for exact.
    """

    phi: dict
    method: str
    samples: int = 0
    seed: Optional[int] = None
    std_error: dict = field(default_factory=dict)
    antithetic: bool = False

    @property
    def players(self) -> tuple:
        return tuple(sorted(self.phi))

    @property
    def total(self) -> float:
        return math.fsum(self.phi.values())


def subset_values(game) -> list:
    """
    @brief v over every subset, indexed by bitmask over game.players.
    """
    players = game.players
    values = []
    for mask in range(1 << len(players)):
        values.append(game.value(frozenset(p for k, p in enumerate(players) if mask >> k & 1)))
    return values


def shapley_exact(game, max_players: int = SHAPLEY_EXACT_MAX) -> ShapleyResult:
    """
    @brief Exact Shapley values by full subset enumeration.
    @throws GameTooLargeError if the game has more than max_players players.
    """
    players = game.players
    size = len(players)
    if size == 0:
        raise GameError("Shapley values of an empty game are undefined")
    if size > max_players:
        raise GameTooLargeError(size, max_players)

    values = subset_values(game)
    weights = [
        math.factorial(s) * math.factorial(size - s - 1) / math.factorial(size)
        for s in range(size)
    ]

    phi = [0.0] * size
    full = (1 << size) - 1
    for mask in range(full):
        weight = weights[bin(mask).count("1")]
        base = values[mask]
        for k in range(size):
            if not mask >> k & 1:
                phi[k] += weight * (values[mask | 1 << k] - base)

    logger.debug("Exact Shapley over %d players (%d subsets)", size, len(values))
    return ShapleyResult(
        phi=dict(zip(players, phi)),
        method=METHOD_EXACT,
        std_error={p: 0.0 for p in players},
    )


def shapley_montecarlo(game, samples: int, seed: int = 0, antithetic: bool = True) -> ShapleyResult:
    """
    @brief Sampled Shapley values over random player orderings.
    @param samples Number of orderings evaluated (>= 1).
    @param seed Seed for numpy's PCG64 bit generator.
    @param antithetic Follow each drawn ordering with its reverse.
    @return ShapleyResult with per-player standard error. Deterministic for
            fixed (game, samples, seed, antithetic).
    """
    if samples < 1:
        raise GameError(f"samples must be >= 1, got {samples}")
    players = game.players
    size = len(players)
    if size == 0:
        raise GameError("Shapley values of an empty game are undefined")

    rng = np.random.Generator(np.random.PCG64(seed))
    contributions = np.zeros((samples, size))
    drawn = None
    for s in range(samples):
        if antithetic and s % 2 == 1:
            order = drawn[::-1]
        else:
            drawn = rng.permutation(size)
            order = drawn

        members = set()
        previous = 0.0
        for k in order:
            members.add(players[k])
            current = game.value(frozenset(members))
            contributions[s, k] = current - previous
            previous = current

    phi = contributions.mean(axis=0)

    if antithetic:
        paired = samples - samples % 2
        units = contributions[:paired].reshape(-1, 2, size).mean(axis=1)
        if samples % 2:
            units = np.vstack([units, contributions[-1:]])
    else:
        units = contributions
    if len(units) > 1:
        std_error = units.std(axis=0, ddof=1) / math.sqrt(len(units))
    else:
        std_error = np.zeros(size)

    logger.debug("Monte-Carlo Shapley: %d players, %d samples, seed %d", size, samples, seed)
    return ShapleyResult(
        phi={p: float(v) for p, v in zip(players, phi)},
        method=METHOD_MONTE_CARLO,
        samples=samples,
        seed=seed,
        std_error={p: float(v) for p, v in zip(players, std_error)},
        antithetic=antithetic,
    )
