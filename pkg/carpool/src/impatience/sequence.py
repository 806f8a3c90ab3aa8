# -*- coding: utf-8 -*-
"""
@file sequence.py
@brief Service sequences and the impatience they cause.
@details
A ServiceSequence is a permutation sigma of a coalition's passenger ids.
Pr_i(sigma) is the set of passengers served strictly before i. Impatience:
  I_i(sigma)   = theta_i * omega_i + omega_i * sum_{j in Pr_i(sigma)} theta_j
  I(S, sigma)  = sum_i I_i(sigma)
theta_j in the predecessor sum is j's full expected sojourn time.
"""

import logging
from dataclasses import dataclass

logger = logging.getLogger(__name__)


class SequenceError(Exception):
    """Base exception for sequence and impatience computations."""


class UnknownPassengerError(SequenceError, LookupError):
    """
    @brief Raised when a passenger id is not part of the sequence or coalition.
    """

    def __init__(self, passenger_id: str):
        super().__init__(f"Unknown passenger id: {passenger_id}")
        self.passenger_id = passenger_id


class SequenceMismatchError(SequenceError):
    """@brief Raised when a sequence is not a permutation of the coalition."""


class CoalitionTooLargeError(SequenceError):
    """
    @brief Raised when exhaustive enumeration is requested beyond its bound.
    """

    def __init__(self, size: int, bound: int):
        super().__init__(
            f"Coalition of {size} passengers exceeds the exhaustive bound {bound}; "
            "use optimal_sequence_smith instead."
        )
        self.size = size
        self.bound = bound


@dataclass(frozen=True)
class ServiceSequence:
    """@brief The order sigma in which the driver serves a coalition."""

    order: tuple

    def __post_init__(self):
        order = tuple(self.order)
        if len(set(order)) != len(order):
            raise SequenceMismatchError(f"Sequence repeats a passenger: {order}")
        object.__setattr__(self, "order", order)

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def position(self, passenger_id: str) -> int:
        try:
            return self.order.index(passenger_id)
        except ValueError:
            raise UnknownPassengerError(passenger_id)

    def swapped(self, k: int) -> "ServiceSequence":
        """@brief Copy with positions k and k + 1 exchanged."""
        order = list(self.order)
        order[k], order[k + 1] = order[k + 1], order[k]
        return ServiceSequence(tuple(order))

    def __str__(self) -> str:
        return " ".join(self.order)


@dataclass(frozen=True)
class ImpatienceBreakdown:
    """
    @brief Per-passenger impatience I_i(sigma) and the coalition total I(S, sigma).
    @details per_passenger is keyed by id, in service order.
    """

    per_passenger: dict
    total: float


def index_coalition(coalition) -> dict:
    """
    @brief Maps passenger id to Passenger, rejecting duplicate ids.
    """
    members = {}
    for passenger in coalition:
        if passenger.id in members:
            raise SequenceError(f"Duplicate passenger id in coalition: {passenger.id}")
        members[passenger.id] = passenger
    return members


def _check_permutation(members: dict, sequence: ServiceSequence) -> None:
    if len(sequence) != len(members) or set(sequence.order) != set(members):
        raise SequenceMismatchError(
            f"Sequence {sequence.order} is not a permutation of coalition {sorted(members)}"
        )


def predecessors(sequence: ServiceSequence, passenger_id: str) -> frozenset:
    """
    @brief Pr_i(sigma): ids served strictly before passenger_id.
    @throws UnknownPassengerError if passenger_id is not in the sequence.
    """
    return frozenset(sequence.order[: sequence.position(passenger_id)])


def impatience_of(passenger, sequence: ServiceSequence, coalition) -> float:
    """
    @brief I_i(sigma) for one coalition member.
    @throws UnknownPassengerError if the passenger is not a member.
    @throws SequenceMismatchError if the sequence does not permute the coalition.
    """
    members = index_coalition(coalition)
    if passenger.id not in members:
        raise UnknownPassengerError(passenger.id)
    _check_permutation(members, sequence)

    waited = sum(members[j].theta for j in predecessors(sequence, passenger.id))
    return passenger.theta * passenger.omega + passenger.omega * waited


def total_impatience(coalition, sequence: ServiceSequence) -> ImpatienceBreakdown:
    """
    @brief I(S, sigma) with its per-passenger decomposition.
    @details Single pass over the order, carrying the predecessors' sojourn sum.
    """
    members = index_coalition(coalition)
    _check_permutation(members, sequence)

    per_passenger = {}
    elapsed = 0.0
    for passenger_id in sequence.order:
        passenger = members[passenger_id]
        per_passenger[passenger_id] = passenger.theta * passenger.omega + passenger.omega * elapsed
        elapsed += passenger.theta

    return ImpatienceBreakdown(per_passenger=per_passenger, total=sum(per_passenger.values()))


def exchange_delta(coalition, sequence: ServiceSequence, k: int) -> float:
    """
    @brief Change in I(S, sigma) when positions k and k + 1 are swapped.
    @return omega_i * theta_j - omega_j * theta_i, where i = order[k], j = order[k + 1].
    """
    members = index_coalition(coalition)
    _check_permutation(members, sequence)
    if not 0 <= k < len(sequence) - 1:
        raise IndexError(f"No adjacent pair at position {k} in a sequence of {len(sequence)}")

    first = members[sequence.order[k]]
    second = members[sequence.order[k + 1]]
    return first.omega * second.theta - second.omega * first.theta
