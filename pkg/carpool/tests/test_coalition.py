"""Tests for the coalition games, Shapley values and axiom checks."""

import itertools
import math
from dataclasses import replace

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.coalition import (
    DUMMY,
    EFFICIENCY,
    SYMMETRY,
    GameError,
    GameTooLargeError,
    ImpatienceGame,
    ShapleyResult,
    SurplusGame,
    TabularGame,
    shapley_exact,
    shapley_montecarlo,
    subset_values,
    verify_axioms,
)
from src.harness import generate_scenario
from src.impatience import UnknownPassengerError
from src.model import Passenger, Travel, base_fare


def subsets(players):
    for r in range(len(players) + 1):
        for combo in itertools.combinations(players, r):
            yield frozenset(combo)


class TestImpatienceGame:
    def test_values(self, worked_passengers):
        game = ImpatienceGame(worked_passengers)
        assert game.value(frozenset()) == 0.0
        assert game.value(frozenset({"p1"})) == 20.0
        assert game.value(frozenset({"p2"})) == 20.0
        assert game.value(frozenset({"p1", "p2"})) == 50.0

    def test_characteristic_value_accepts_any_iterable(self, worked_passengers):
        game = ImpatienceGame(worked_passengers)
        assert game.characteristic_value(["p2", "p1"]) == 50.0
        assert game.characteristic_value(()) == 0.0

    def test_memoized(self, worked_passengers):
        game = ImpatienceGame(worked_passengers)
        game.value(frozenset({"p1", "p2"}))
        game.value(frozenset({"p1", "p2"}))
        assert game.cache_size == 1

    def test_subgame_shares_memo(self, worked_passengers):
        game = ImpatienceGame(worked_passengers)
        sub = game.subgame({"p1"})
        assert sub.players == ("p1",)
        sub.value(frozenset({"p1"}))
        assert game.cache_size == 1

    def test_unknown_member(self, worked_passengers):
        with pytest.raises(UnknownPassengerError):
            ImpatienceGame(worked_passengers).value(frozenset({"p7"}))

    def test_exhaustive_solver_agrees(self, random_passengers):
        passengers = random_passengers(11, 5)
        smith = ImpatienceGame(passengers)
        exhaustive = ImpatienceGame(passengers, solver="exhaustive")
        for members in subsets(smith.players):
            assert smith.value(members) == pytest.approx(exhaustive.value(members), rel=1e-9, abs=1e-9)


class TestSurplusGame:
    def test_additive(self, params, worked_passengers):
        game = SurplusGame(worked_passengers, params)
        rate = (params.alpha - params.rho) + (params.epsilon - params.beta)
        assert game.value(frozenset({"p1"})) == pytest.approx(rate * 30.0, abs=1e-9)
        assert game.value(frozenset({"p1", "p2"})) == pytest.approx(rate * 40.0, abs=1e-9)

    def test_shapley_is_own_worth(self, params, worked_passengers):
        result = shapley_exact(SurplusGame(worked_passengers, params))
        rate = (params.alpha - params.rho) + (params.epsilon - params.beta)
        for passenger in worked_passengers:
            assert result.phi[passenger.id] == pytest.approx(rate * base_fare(passenger.travel, params), abs=1e-9)


class TestTabularGame:
    def test_from_function_and_add(self):
        a = TabularGame.from_function(("a", "b"), lambda s: float(len(s)))
        b = TabularGame.from_function(("a", "b"), lambda s: 1.0)
        total = a + b
        assert total.value(frozenset({"a", "b"})) == 3.0
        assert total.value(frozenset()) == 0.0

    def test_missing_entry(self):
        game = TabularGame(("a", "b"), {frozenset({"a"}): 1.0})
        with pytest.raises(GameError):
            game.value(frozenset({"b"}))

    def test_subgame(self):
        game = TabularGame.from_function(("a", "b", "c"), lambda s: float(len(s)) ** 2)
        assert game.subgame({"a", "c"}).value(frozenset({"a", "c"})) == 4.0


class TestShapleyExact:
    def test_worked_example(self, worked_passengers):
        result = shapley_exact(ImpatienceGame(worked_passengers))
        assert result.phi["p1"] == pytest.approx(25.0, abs=1e-9)
        assert result.phi["p2"] == pytest.approx(25.0, abs=1e-9)
        assert result.method == "exact"
        assert result.samples == 0 and result.seed is None

    def test_singleton(self, worked_passengers):
        result = shapley_exact(ImpatienceGame(worked_passengers[:1]))
        assert result.phi == {"p1": 20.0}

    def test_glove_game(self):
        # v = 1 for any coalition holding "l" and one of "r1", "r2"
        game = TabularGame.from_function(
            ("l", "r1", "r2"), lambda s: 1.0 if "l" in s and len(s) >= 2 else 0.0
        )
        result = shapley_exact(game)
        assert result.phi["l"] == pytest.approx(2 / 3, abs=1e-12)
        assert result.phi["r1"] == pytest.approx(1 / 6, abs=1e-12)

    def test_too_large(self, random_passengers):
        with pytest.raises(GameTooLargeError) as info:
            shapley_exact(ImpatienceGame(random_passengers(1, 13)))
        assert info.value.size == 13

    def test_matches_permutation_average(self, random_passengers):
        game = ImpatienceGame(random_passengers(5, 5))
        players = game.players
        totals = dict.fromkeys(players, 0.0)
        orders = list(itertools.permutations(players))
        for order in orders:
            members = set()
            for player in order:
                before = game.value(frozenset(members))
                members.add(player)
                totals[player] += game.value(frozenset(members)) - before
        result = shapley_exact(game)
        for player in players:
            assert result.phi[player] == pytest.approx(totals[player] / len(orders), rel=1e-9)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32), st.integers(min_value=1, max_value=6),
           st.floats(min_value=0.1, max_value=10.0))
    def test_scale_covariance(self, seed, n, k):
        rng = np.random.default_rng(seed)
        players = tuple(f"q{i}" for i in range(n))
        table = {members: float(rng.uniform(0, 10)) for members in subsets(players) if members}
        game = TabularGame(players, table)
        scaled = TabularGame(players, {m: k * v for m, v in table.items()})
        base = shapley_exact(game)
        for player in players:
            assert shapley_exact(scaled).phi[player] == pytest.approx(k * base.phi[player], rel=1e-9, abs=1e-9)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32), st.integers(min_value=2, max_value=6), st.data())
    def test_relabelling_permutes_phi(self, seed, n, data):
        passengers = generate_scenario(seed, n).passengers
        labels = data.draw(st.permutations([f"r{k}" for k in range(n)]))
        renamed = [replace(p, id=label) for p, label in zip(passengers, labels)]
        original = shapley_exact(ImpatienceGame(passengers))
        relabelled = shapley_exact(ImpatienceGame(renamed))
        for passenger, label in zip(passengers, labels):
            assert relabelled.phi[label] == pytest.approx(original.phi[passenger.id], rel=1e-9, abs=1e-9)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32), st.integers(min_value=1, max_value=6))
    def test_additivity(self, seed, n):
        rng = np.random.default_rng(seed)
        players = tuple(f"q{i}" for i in range(n))
        first = TabularGame.from_function(players, lambda s: float(rng.uniform(-5, 10)))
        second = TabularGame.from_function(players, lambda s: float(rng.uniform(0, 20)))
        combined = shapley_exact(first + second)
        left, right = shapley_exact(first), shapley_exact(second)
        for player in players:
            assert combined.phi[player] == pytest.approx(left.phi[player] + right.phi[player], rel=1e-9, abs=1e-9)


class TestShapleyMonteCarlo:
    def test_deterministic(self, random_passengers):
        game = ImpatienceGame(random_passengers(2, 6))
        first = shapley_montecarlo(game, 200, seed=9)
        second = shapley_montecarlo(game, 200, seed=9)
        assert first == second

    def test_efficiency_per_sample(self, random_passengers):
        game = ImpatienceGame(random_passengers(4, 7))
        result = shapley_montecarlo(game, 37, seed=1, antithetic=False)
        assert result.total == pytest.approx(game.value(frozenset(game.players)), rel=1e-9)

    def test_single_sample_has_zero_error(self, worked_passengers):
        result = shapley_montecarlo(ImpatienceGame(worked_passengers), 1, seed=3)
        assert set(result.std_error.values()) == {0.0}

    def test_antithetic_recovers_pairwise_game(self, worked_passengers):
        result = shapley_montecarlo(ImpatienceGame(worked_passengers), 2, seed=0)
        assert result.phi["p1"] == pytest.approx(25.0, abs=1e-9)
        assert result.phi["p2"] == pytest.approx(25.0, abs=1e-9)

    def test_antithetic_close_to_exact_at_eight(self, random_passengers):
        game = ImpatienceGame(random_passengers(2024, 8))
        exact = shapley_exact(game)
        sampled = shapley_montecarlo(game, 10_000, seed=17)
        for player in game.players:
            assert sampled.phi[player] == pytest.approx(exact.phi[player], rel=0.02)

    def test_plain_sampling_close_to_exact_at_eight(self):
        riders = tuple(
            Passenger(f"p{k + 1}", Travel(5.0, 10.0), theta=10.0 + 2.5 * k, omega=1.0 + k / 7)
            for k in range(8)
        )
        game = ImpatienceGame(riders)
        exact = shapley_exact(game)
        sampled = shapley_montecarlo(game, 10_000, seed=17, antithetic=False)
        for player in game.players:
            assert sampled.phi[player] == pytest.approx(exact.phi[player], rel=0.02)

    def test_plain_sampling_within_standard_error(self, random_passengers):
        game = ImpatienceGame(random_passengers(2024, 8))
        exact = shapley_exact(game)
        sampled = shapley_montecarlo(game, 10_000, seed=17, antithetic=False)
        for player in game.players:
            assert sampled.std_error[player] > 0
            assert abs(sampled.phi[player] - exact.phi[player]) <= 5 * sampled.std_error[player]

    def test_invalid_samples(self, worked_passengers):
        with pytest.raises(GameError):
            shapley_montecarlo(ImpatienceGame(worked_passengers), 0)


class TestAxioms:
    @pytest.mark.parametrize("n", [1, 2, 4, 6, 8])
    def test_exact_values_pass(self, random_passengers, n):
        game = ImpatienceGame(random_passengers(n, n))
        report = verify_axioms(game, shapley_exact(game))
        assert report.all_passed

    def test_identical_riders_are_symmetric(self):
        twins = tuple(Passenger(f"p{k}", Travel(1.0, 1.0), theta=7.0, omega=1.5) for k in (1, 2, 3))
        game = ImpatienceGame(twins)
        report = verify_axioms(game, shapley_exact(game))
        assert report.check(SYMMETRY).passed
        assert "3 interchangeable pairs" in report.check(SYMMETRY).detail

    def test_dummy_detected(self):
        game = TabularGame.from_function(("a", "z"), lambda s: 5.0 if "a" in s else 0.0)
        report = verify_axioms(game, shapley_exact(game))
        assert report.check(DUMMY).passed
        assert "z" in report.check(DUMMY).detail

    def test_broken_result_fails(self, worked_passengers):
        game = ImpatienceGame(worked_passengers)
        bad = ShapleyResult(phi={"p1": 30.0, "p2": 25.0}, method="exact")
        report = verify_axioms(game, bad)
        assert not report.check(EFFICIENCY).passed
        assert not report.check(SYMMETRY).passed

    def test_large_games_skip_enumeration(self, random_passengers):
        game = ImpatienceGame(random_passengers(8, 5))
        report = verify_axioms(game, shapley_exact(game), max_players=4)
        assert report.check(SYMMETRY).skipped
        assert report.check(EFFICIENCY).passed


class TestGameStructure:
    @pytest.mark.parametrize("seed", range(5))
    def test_monotone_and_phi_above_solo_cost(self, random_passengers, seed):
        passengers = random_passengers(100 + seed, 6)
        game = ImpatienceGame(passengers)
        values = subset_values(game)
        for mask, value in enumerate(values):
            for k in range(6):
                assert values[mask | 1 << k] >= value - 1e-9
        result = shapley_exact(game)
        for passenger in passengers:
            assert result.phi[passenger.id] >= passenger.theta * passenger.omega - 1e-9
            assert result.phi[passenger.id] > 0
        assert math.isclose(result.total, values[-1], rel_tol=1e-9)
