"""Tests for service sequences, impatience and the sequence optimizers."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from src.impatience import (
    CoalitionTooLargeError,
    SequenceError,
    SequenceMismatchError,
    ServiceSequence,
    UnknownPassengerError,
    exchange_delta,
    impatience_of,
    is_exchange_optimal,
    max_exchange_gain,
    optimal_sequence,
    optimal_sequence_exhaustive,
    optimal_sequence_smith,
    predecessors,
    total_impatience,
)
from src.model import Passenger, Travel

rates = st.floats(min_value=0.1, max_value=50.0, allow_nan=False, allow_infinity=False)


def riders(thetas, omegas):
    return tuple(
        Passenger(f"p{k + 1}", Travel(1.0, 1.0), theta=theta, omega=omega)
        for k, (theta, omega) in enumerate(zip(thetas, omegas))
    )


rider_lists = st.integers(min_value=2, max_value=6).flatmap(
    lambda n: st.tuples(st.lists(rates, min_size=n, max_size=n), st.lists(rates, min_size=n, max_size=n))
)


class TestServiceSequence:
    def test_rejects_repeats(self):
        with pytest.raises(SequenceMismatchError):
            ServiceSequence(("p1", "p1"))

    def test_swapped(self):
        assert ServiceSequence(("a", "b", "c")).swapped(1).order == ("a", "c", "b")

    def test_str(self):
        assert str(ServiceSequence(("p2", "p1"))) == "p2 p1"


class TestPredecessors:
    def test_first_has_none(self):
        assert predecessors(ServiceSequence(("p1", "p2", "p3")), "p1") == frozenset()

    def test_last_has_all_others(self):
        assert predecessors(ServiceSequence(("p1", "p2", "p3")), "p3") == {"p1", "p2"}

    def test_reversed(self):
        assert predecessors(ServiceSequence(("p2", "p1")), "p1") == {"p2"}

    def test_unknown_id(self):
        with pytest.raises(UnknownPassengerError) as info:
            predecessors(ServiceSequence(("p1",)), "p9")
        assert info.value.passenger_id == "p9"
        assert isinstance(info.value, LookupError)


class TestImpatience:
    def test_second_served(self, worked_passengers):
        p2 = worked_passengers[1]
        assert impatience_of(p2, ServiceSequence(("p1", "p2")), worked_passengers) == 30.0

    def test_first_served_after_other(self, worked_passengers):
        p1 = worked_passengers[0]
        assert impatience_of(p1, ServiceSequence(("p2", "p1")), worked_passengers) == 60.0

    def test_singleton(self, worked_passengers):
        p1 = worked_passengers[0]
        assert total_impatience((p1,), ServiceSequence(("p1",))).total == 20.0

    @pytest.mark.parametrize("order, expected", [(("p1", "p2"), 50.0), (("p2", "p1"), 80.0)])
    def test_total(self, worked_passengers, order, expected):
        breakdown = total_impatience(worked_passengers, ServiceSequence(order))
        assert breakdown.total == expected
        assert tuple(breakdown.per_passenger) == order

    def test_sequence_must_permute_coalition(self, worked_passengers):
        with pytest.raises(SequenceMismatchError):
            total_impatience(worked_passengers, ServiceSequence(("p1",)))

    def test_non_member(self, worked_passengers):
        outsider = Passenger("p9", Travel(1.0, 1.0), theta=1.0, omega=1.0)
        with pytest.raises(UnknownPassengerError):
            impatience_of(outsider, ServiceSequence(("p1", "p2")), worked_passengers)

    @settings(max_examples=50, deadline=None)
    @given(rider_lists)
    def test_breakdown_matches_per_passenger(self, data):
        coalition = riders(*data)
        sequence = ServiceSequence(tuple(p.id for p in coalition))
        breakdown = total_impatience(coalition, sequence)
        for passenger in coalition:
            assert breakdown.per_passenger[passenger.id] == pytest.approx(
                impatience_of(passenger, sequence, coalition), rel=1e-12
            )


class TestExhaustive:
    def test_worked_example(self, worked_passengers):
        sequence, value = optimal_sequence_exhaustive(worked_passengers)
        assert sequence.order == ("p1", "p2")
        assert value == 50.0

    def test_singleton(self, worked_passengers):
        sequence, value = optimal_sequence_exhaustive(worked_passengers[:1])
        assert sequence.order == ("p1",)
        assert value == 20.0

    def test_optimum_is_last_permutation(self):
        # Ratios fall with the id, so the reversed order is the only optimum
        coalition = riders([40.0, 30.0, 20.0, 10.0], [1.0, 1.0, 1.0, 1.0])
        sequence, value = optimal_sequence_exhaustive(coalition)
        assert sequence.order == ("p4", "p3", "p2", "p1")
        assert value == pytest.approx(total_impatience(coalition, sequence).total)
        assert value == pytest.approx(100.0 + 10.0 + 30.0 + 60.0)

    def test_ties_pick_smallest_id_order(self):
        coalition = riders([2.0, 4.0, 6.0, 8.0], [1.0, 2.0, 3.0, 4.0])
        totals = {
            total_impatience(coalition, ServiceSequence(tuple(f"p{k}" for k in perm))).total
            for perm in itertools.permutations((1, 2, 3, 4))
        }
        assert max(totals) - min(totals) < 1e-9
        sequence, value = optimal_sequence_exhaustive(coalition)
        assert sequence.order == ("p1", "p2", "p3", "p4")
        assert value == pytest.approx(min(totals))

    def test_bound(self, random_passengers):
        with pytest.raises(CoalitionTooLargeError) as info:
            optimal_sequence_exhaustive(random_passengers(3, 10))
        assert (info.value.size, info.value.bound) == (10, 9)

    def test_empty(self):
        with pytest.raises(SequenceError):
            optimal_sequence_exhaustive(())


class TestSmith:
    def test_worked_example(self, worked_passengers):
        assert optimal_sequence_smith(worked_passengers).order == ("p1", "p2")

    def test_equal_ratios_by_id(self):
        coalition = riders([2.0, 4.0, 1.0], [2.0, 4.0, 1.0])
        assert optimal_sequence_smith(tuple(reversed(coalition))).order == ("p1", "p2", "p3")

    def test_dispatch(self, worked_passengers):
        assert optimal_sequence(worked_passengers, "smith")[1] == 50.0
        assert optimal_sequence(worked_passengers, "exhaustive")[1] == 50.0
        with pytest.raises(ValueError):
            optimal_sequence(worked_passengers, "greedy")

    @settings(max_examples=60, deadline=None)
    @given(rider_lists)
    def test_matches_exhaustive(self, data):
        coalition = riders(*data)
        _, smith = optimal_sequence(coalition, "smith")
        _, exhaustive = optimal_sequence_exhaustive(coalition)
        assert smith == pytest.approx(exhaustive, rel=1e-9, abs=1e-9)

    @settings(max_examples=60, deadline=None)
    @given(rider_lists)
    def test_no_improving_adjacent_swap(self, data):
        coalition = riders(*data)
        sequence = optimal_sequence_smith(coalition)
        assert is_exchange_optimal(coalition, sequence)
        assert max_exchange_gain(coalition, sequence) <= 1e-9


class TestExchangeDelta:
    def test_worked_swap(self, worked_passengers):
        # omega_1 * theta_2 - omega_2 * theta_1 = 2 * 20 - 1 * 10
        assert exchange_delta(worked_passengers, ServiceSequence(("p1", "p2")), 0) == 30.0

    def test_out_of_range(self, worked_passengers):
        with pytest.raises(IndexError):
            exchange_delta(worked_passengers, ServiceSequence(("p1", "p2")), 1)

    @settings(max_examples=50, deadline=None)
    @given(rider_lists, st.data())
    def test_equals_total_difference(self, data, draw):
        coalition = riders(*data)
        order = draw.draw(st.permutations([p.id for p in coalition]))
        sequence = ServiceSequence(tuple(order))
        k = draw.draw(st.integers(min_value=0, max_value=len(coalition) - 2))
        before = total_impatience(coalition, sequence).total
        after = total_impatience(coalition, sequence.swapped(k)).total
        assert after - before == pytest.approx(exchange_delta(coalition, sequence, k), rel=1e-9, abs=1e-9)

    def test_permutation_values_cover_both_orders(self, worked_passengers):
        totals = sorted(
            total_impatience(worked_passengers, ServiceSequence(order)).total
            for order in itertools.permutations(("p1", "p2"))
        )
        assert totals == [50.0, 80.0]
