# -*- coding: utf-8 -*-
"""
@file axioms.py
@brief Checks a Shapley result against the efficiency, symmetry and dummy axioms.
@details
Failures are report entries, never exceptions. Monte-Carlo results are judged
with a tolerance widened by four standard errors.
"""

import itertools
import logging
from dataclasses import dataclass

from src.coalition.shapley import (
    METHOD_MONTE_CARLO,
    SHAPLEY_EXACT_MAX,
    subset_values,
)

logger = logging.getLogger(__name__)

AXIOM_TOLERANCE = 1e-9
STD_ERROR_WIDTH = 4.0

EFFICIENCY = "efficiency"
SYMMETRY = "symmetry"
DUMMY = "dummy"


@dataclass(frozen=True)
class AxiomCheck:
    axiom: str
    passed: bool
    skipped: bool = False
    detail: str = ""


@dataclass(frozen=True)
class AxiomReport:
    checks: tuple

    @property
    def all_passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def check(self, axiom: str) -> AxiomCheck:
        for entry in self.checks:
            if entry.axiom == axiom:
                return entry
        raise KeyError(axiom)


def _player_tolerance(result, player: str, tolerance: float) -> float:
    if result.method != METHOD_MONTE_CARLO:
        return tolerance
    return tolerance + STD_ERROR_WIDTH * result.std_error.get(player, 0.0)


def _efficiency(game, result, tolerance: float) -> AxiomCheck:
    grand = game.value(frozenset(game.players))
    gap = result.total - grand
    allowed = tolerance if result.method != METHOD_MONTE_CARLO else tolerance * max(1.0, abs(grand))
    return AxiomCheck(
        EFFICIENCY,
        passed=abs(gap) <= allowed,
        detail=f"sum(phi) - v(S) = {gap:.3e}",
    )


def verify_axioms(game, result, tolerance: float = AXIOM_TOLERANCE,
                  max_players: int = SHAPLEY_EXACT_MAX) -> AxiomReport:
    """
    @brief Verifies efficiency, symmetry and dummy for result on game.
    @param game The IValueFunction the result was computed from.
    @param result ShapleyResult.
    @param tolerance Absolute tolerance for value comparisons.
    @param max_players Largest game for which the subset-based axioms are enumerated.
    @return AxiomReport. Symmetry and dummy are reported as skipped for larger games.
    """
    players = game.players
    size = len(players)
    if set(result.phi) != set(players):
        mismatch = AxiomCheck(EFFICIENCY, passed=False, detail="result players differ from game players")
        return AxiomReport((mismatch,))

    efficiency = _efficiency(game, result, tolerance)
    if size > max_players:
        logger.info("Skipping symmetry and dummy checks for %d players", size)
        return AxiomReport((
            efficiency,
            AxiomCheck(SYMMETRY, passed=True, skipped=True, detail="game too large"),
            AxiomCheck(DUMMY, passed=True, skipped=True, detail="game too large"),
        ))

    values = subset_values(game)
    bit = {p: 1 << k for k, p in enumerate(players)}

    def without(*excluded):
        rest = [bit[p] for p in players if p not in excluded]
        for r in range(len(rest) + 1):
            for combo in itertools.combinations(rest, r):
                yield sum(combo)

    symmetric_pairs = []
    violations = []
    for i, j in itertools.combinations(players, 2):
        interchangeable = all(
            abs(values[mask | bit[i]] - values[mask | bit[j]]) <= tolerance
            for mask in without(i, j)
        )
        if not interchangeable:
            continue
        symmetric_pairs.append((i, j))
        allowed = _player_tolerance(result, i, tolerance) + _player_tolerance(result, j, 0.0)
        if abs(result.phi[i] - result.phi[j]) > allowed:
            violations.append(f"{i}~{j}")
    symmetry = AxiomCheck(
        SYMMETRY,
        passed=not violations,
        detail=f"{len(symmetric_pairs)} interchangeable pairs"
        + (f"; unequal phi for {', '.join(violations)}" if violations else ""),
    )

    dummies = []
    dummy_violations = []
    for p in players:
        if all(abs(values[mask | bit[p]] - values[mask]) <= tolerance for mask in without(p)):
            dummies.append(p)
            if abs(result.phi[p]) > _player_tolerance(result, p, tolerance):
                dummy_violations.append(p)
    dummy = AxiomCheck(
        DUMMY,
        passed=not dummy_violations,
        detail=f"dummies: {', '.join(dummies) or 'none'}"
        + (f"; nonzero phi for {', '.join(dummy_violations)}" if dummy_violations else ""),
    )

    report = AxiomReport((efficiency, symmetry, dummy))
    logger.debug("Axiom report: %s", report)
    return report
