# -*- coding: utf-8 -*-
"""
@file games.py
@brief Characteristic functions of the passenger coalition game.
@details
This module defines:
  - IValueFunction: the interface every characteristic function implements.
  - ImpatienceGame: v(T) = I(T, sigma*(T)), the default game.
  - SurplusGame: v(T) = total surplus of T's passengers and the driver.
  - TabularGame: an explicit value table, for synthetic games.
"""

import logging

from src.impatience import (
    EXHAUSTIVE_BOUND,
    SOLVER_SMITH,
    UnknownPassengerError,
    index_coalition,
    optimal_sequence,
)
from src.model import base_fare

logger = logging.getLogger(__name__)


class GameError(Exception):
    """Base exception for coalition game computations."""


class GameTooLargeError(GameError):
    """
    @brief Raised when subset enumeration is requested beyond its bound.
    """

    def __init__(self, size: int, bound: int):
        super().__init__(
            f"Game with {size} players exceeds the exact bound {bound}; "
            "use shapley_montecarlo instead."
        )
        self.size = size
        self.bound = bound


class IValueFunction:
    """
    @brief Interface for a characteristic function v over a fixed player set.
    """

    @property
    def players(self) -> tuple:
        """
        @brief Player ids, sorted ascending.
        """
        raise NotImplementedError

    def value(self, members: frozenset) -> float:
        """
        @brief v(members). v(empty set) is 0.
        @param members Subset of players.
        """
        raise NotImplementedError

    def subgame(self, members) -> "IValueFunction":
        """
        @brief The same game restricted to a subset of players.
        """
        raise NotImplementedError

    def _check_members(self, members) -> frozenset:
        members = frozenset(members)
        unknown = members.difference(self.players)
        if unknown:
            raise UnknownPassengerError(sorted(unknown)[0])
        return members


class ImpatienceGame(IValueFunction):
    """
    @brief v(T) = minimal total impatience of T under its best service sequence.
    @details
    Subset values are memoized. Subgames share the parent's memo table, so a
    coalition search and the Shapley computations inside it optimize each
    subset once. The memo table is not locked: confine a game to one thread.
    """

    def __init__(self, passengers, solver: str = SOLVER_SMITH,
                 bound: int = EXHAUSTIVE_BOUND, _cache: dict = None) -> None:
        self._passengers = index_coalition(passengers)
        self._players = tuple(sorted(self._passengers))
        self._solver = solver
        self._bound = bound
        self._cache = {} if _cache is None else _cache

    @property
    def players(self) -> tuple:
        return self._players

    @property
    def passengers(self) -> tuple:
        return tuple(self._passengers[pid] for pid in self._players)

    def characteristic_value(self, subset) -> float:
        """
        @brief I(subset, sigma*(subset)); 0 for the empty subset.
        @throws UnknownPassengerError for ids outside the game.
        """
        members = self._check_members(subset)
        if not members:
            return 0.0
        cached = self._cache.get(members)
        if cached is not None:
            return cached

        _, value = optimal_sequence(
            [self._passengers[pid] for pid in members], self._solver, self._bound
        )
        self._cache[members] = value
        logger.debug("v(%s) = %.6f", ",".join(sorted(members)), value)
        return value

    def value(self, members: frozenset) -> float:
        return self.characteristic_value(members)

    def subgame(self, members) -> "ImpatienceGame":
        members = self._check_members(members)
        return ImpatienceGame(
            [self._passengers[pid] for pid in members],
            solver=self._solver,
            bound=self._bound,
            _cache=self._cache,
        )

    @property
    def cache_size(self) -> int:
        return len(self._cache)


class SurplusGame(IValueFunction):
    """
    @brief v(T) = sum over T of (alpha - rho) * F(T_i) + (epsilon - beta) * F(T_i).
    @details Passenger surplus plus driver surplus created by serving T. The game is additive.
    """

    def __init__(self, passengers, params) -> None:
        self._passengers = index_coalition(passengers)
        self._players = tuple(sorted(self._passengers))
        self._params = params
        rate = (params.alpha - params.rho) + (params.epsilon - params.beta)
        self._worth = {
            pid: rate * base_fare(p.travel, params) for pid, p in self._passengers.items()
        }

    @property
    def players(self) -> tuple:
        return self._players

    def value(self, members: frozenset) -> float:
        members = self._check_members(members)
        return sum(self._worth[pid] for pid in sorted(members))

    def subgame(self, members) -> "SurplusGame":
        members = self._check_members(members)
        return SurplusGame([self._passengers[pid] for pid in members], self._params)


class TabularGame(IValueFunction):
    """
    @brief A game given by an explicit table {frozenset(members): value}.
    """

    def __init__(self, players, values: dict) -> None:
        self._players = tuple(sorted(players))
        self._values = {frozenset(k): float(v) for k, v in values.items()}
        self._values.setdefault(frozenset(), 0.0)

    @classmethod
    def from_function(cls, players, fn) -> "TabularGame":
        """@brief Tabulates fn(frozenset) over every subset of players."""
        players = tuple(sorted(players))
        values = {}
        for mask in range(1 << len(players)):
            members = frozenset(p for k, p in enumerate(players) if mask >> k & 1)
            values[members] = 0.0 if not members else fn(members)
        return cls(players, values)

    @property
    def players(self) -> tuple:
        return self._players

    def value(self, members: frozenset) -> float:
        members = self._check_members(members)
        try:
            return self._values[members]
        except KeyError:
            raise GameError(f"No value tabulated for coalition {sorted(members)}")

    def subgame(self, members) -> "TabularGame":
        members = self._check_members(members)
        return TabularGame(
            members, {k: v for k, v in self._values.items() if k <= members}
        )

    def __add__(self, other: "TabularGame") -> "TabularGame":
        if self.players != other.players:
            raise GameError("Games must share the same players to be added")
        return TabularGame(
            self.players, {k: v + other.value(k) for k, v in self._values.items()}
        )
