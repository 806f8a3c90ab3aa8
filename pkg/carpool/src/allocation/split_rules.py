# -*- coding: utf-8 -*-
"""
@file split_rules.py
@brief Rules for dividing the compensation pool among coalition members.
@details
  - ShapleyProportionalSplit: x_i = pool * phi_i / sum_j phi_j (default).
  - EqualSplit: x_i = pool / |S|, which maximizes min_i x_i for a fixed pool.
"""


class AllocationError(Exception):
    """Base exception for allocation computations."""


class NonPositiveShapleyError(AllocationError):
    """@brief Raised when a proportional split meets a Shapley value <= 0."""

    def __init__(self, passenger_id: str, phi: float):
        super().__init__(f"Shapley value of {passenger_id} must be > 0, got {phi}")
        self.passenger_id = passenger_id
        self.phi = phi


class ISplitRule:
    """
    @brief Interface for a pool split rule.
    """

    name = ""

    def split(self, pool: float, shapley) -> dict:
        """
        @brief Divides pool among the players of a ShapleyResult.
        @param pool Compensation pool, > 0.
        @param shapley ShapleyResult over the coalition.
        @return Mapping passenger id -> compensation x_i.
        """
        raise NotImplementedError


class ShapleyProportionalSplit(ISplitRule):
    name = "shapley"

    def split(self, pool: float, shapley) -> dict:
        for pid, phi in shapley.phi.items():
            if not phi > 0:
                raise NonPositiveShapleyError(pid, phi)
        total = shapley.total
        return {pid: pool * shapley.phi[pid] / total for pid in shapley.players}


class EqualSplit(ISplitRule):
    name = "equal"

    def split(self, pool: float, shapley) -> dict:
        players = shapley.players
        return {pid: pool / len(players) for pid in players}


SPLIT_RULES = {
    ShapleyProportionalSplit.name: ShapleyProportionalSplit,
    EqualSplit.name: EqualSplit,
}


def get_split_rule(name: str) -> ISplitRule:
    """@brief Split rule instance by name ("shapley" or "equal")."""
    try:
        return SPLIT_RULES[name]()
    except KeyError:
        raise ValueError(f"Unknown split rule: {name}. Choose from {sorted(SPLIT_RULES)}")
