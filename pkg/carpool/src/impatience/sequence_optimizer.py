# -*- coding: utf-8 -*-
"""
@file sequence_optimizer.py
@brief Finds the impatience-minimizing service sequence sigma*.
@details
Two solvers are provided:
  - optimal_sequence_exhaustive: enumerates every permutation (the oracle).
  - optimal_sequence_smith: sorts by theta / omega ascending. Swapping an
    adjacent pair (i, j) changes the total by omega_i * theta_j - omega_j * theta_i,
    so an order sorted by that ratio admits no improving swap and is optimal.
Both break ties towards ascending passenger id.
"""

import itertools
import logging

from src.impatience.sequence import (
    CoalitionTooLargeError,
    SequenceError,
    ServiceSequence,
    exchange_delta,
    index_coalition,
    total_impatience,
)

logger = logging.getLogger(__name__)

EXHAUSTIVE_BOUND = 9

# Relative margin a permutation must beat to replace the incumbent optimum.
TIE_TOLERANCE = 1e-12

SOLVER_SMITH = "smith"
SOLVER_EXHAUSTIVE = "exhaustive"


def optimal_sequence_exhaustive(coalition, bound: int = EXHAUSTIVE_BOUND):
    """
    @brief Exhaustive search over all |S|! service orders.
    @param coalition Passengers of S.
    @param bound Largest coalition size accepted.
    @return (sigma*, I(S, sigma*)). Among optima the lexicographically smallest id order wins.
    @throws CoalitionTooLargeError if |S| > bound.
    """
    members = sorted(index_coalition(coalition).values(), key=lambda p: p.id)
    size = len(members)
    if size == 0:
        raise SequenceError("Cannot sequence an empty coalition")
    if size > bound:
        raise CoalitionTooLargeError(size, bound)

    thetas = [p.theta for p in members]
    omegas = [p.omega for p in members]

    # permutations() of a sorted range yields lexicographic order, so the first
    # optimum met is the tie-break winner.
    best_delay = 0.0
    best_perm = None
    for perm in itertools.permutations(range(size)):
        elapsed = 0.0
        delay = 0.0
        for k in perm:
            delay += omegas[k] * elapsed
            elapsed += thetas[k]
        if best_perm is None or delay < best_delay - TIE_TOLERANCE * max(1.0, abs(best_delay)):
            best_delay = delay
            best_perm = perm

    sequence = ServiceSequence(tuple(members[k].id for k in best_perm))
    value = total_impatience(members, sequence).total
    logger.debug("Exhaustive search over %d passengers: sigma*=%s, I=%.6f", size, sequence, value)
    return sequence, value


def optimal_sequence_smith(coalition) -> ServiceSequence:
    """
    @brief Orders the coalition by theta / omega ascending, ties by id.
    @throws SequenceError on an empty coalition.
    """
    members = index_coalition(coalition)
    if not members:
        raise SequenceError("Cannot sequence an empty coalition")
    ordered = sorted(members.values(), key=lambda p: (p.ratio, p.id))
    return ServiceSequence(tuple(p.id for p in ordered))


def optimal_sequence(coalition, method: str = SOLVER_SMITH, bound: int = EXHAUSTIVE_BOUND):
    """
    @brief Solves the C6 subproblem with the chosen solver.
    @return (sigma*, I(S, sigma*)).
    """
    if method == SOLVER_EXHAUSTIVE:
        return optimal_sequence_exhaustive(coalition, bound)
    if method != SOLVER_SMITH:
        raise ValueError(f"Unknown sequence solver: {method}")
    sequence = optimal_sequence_smith(coalition)
    return sequence, total_impatience(coalition, sequence).total


def max_exchange_gain(coalition, sequence: ServiceSequence) -> float:
    """
    @brief Largest decrease of I(S, sigma) reachable by one adjacent swap (0 if none).
    """
    gain = 0.0
    for k in range(len(sequence) - 1):
        gain = max(gain, -exchange_delta(coalition, sequence, k))
    return gain


def is_exchange_optimal(coalition, sequence: ServiceSequence, tolerance: float = 1e-9) -> bool:
    """@brief True when no adjacent swap lowers total impatience by more than tolerance."""
    return max_exchange_gain(coalition, sequence) <= tolerance
