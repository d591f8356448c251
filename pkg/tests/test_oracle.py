import random

import pytest

from cubefire.dynamics import evolve, hamiltonian_orientation, Orientation
from cubefire.oracle import (
    census,
    check_lemma23,
    random_orientation,
    reference_period,
    search_partition,
)
from cubefire.partition import LeftCyclicPartition, construct_even, h4_order5, validate


class TestSearchPartition:
    @pytest.mark.parametrize("n", (2, 3))
    def test_no_order_3(self, n):
        outcome = search_partition(n, 3)
        assert not outcome.found
        assert outcome.witness is None

    def test_no_order_3_on_h4_pruned(self):
        assert not search_partition(4, 3).found

    def test_order_4_on_h3_found(self):
        outcome = search_partition(3, 4)
        assert outcome.found
        assert validate(outcome.witness).valid
        assert outcome.witness.k == 4

    @pytest.mark.parametrize("k", (5, 7))
    def test_odd_bound_on_h3(self, k):
        assert not search_partition(3, k).found

    def test_finds_whatever_constructors_build(self):
        for n in (1, 2, 3):
            for p in range(2, (1 << n) + 1, 2):
                assert search_partition(n, p).found, (n, p)

    def test_out_of_range_rejected_with_cost(self):
        with pytest.raises(ValueError, match="assignment space"):
            search_partition(5, 3)
        with pytest.raises(ValueError):
            search_partition(3, 9)

    def test_counts_nodes(self):
        assert search_partition(2, 3).nodes_explored > 0


class TestCensus:
    def test_h2(self):
        result = census(2)
        assert result.total == 16
        assert sum(result.entries.values()) == 16
        assert result.periods() == {1, 2, 4}

    def test_h3(self):
        result = census(3)
        assert result.total == 4096
        assert sum(result.entries.values()) == 4096
        assert result.periods() == {1, 2, 4, 6, 8}

    def test_h4_rejected(self):
        with pytest.raises(ValueError):
            census(4)

    def test_doc_sorted(self):
        doc = census(2).to_doc()
        keys = [(e["period"], e["transient"]) for e in doc["entries"]]
        assert keys == sorted(keys)


class TestReferencePeriod:
    def test_single_edge(self):
        o = Orientation.from_direction_bits(1, [0])
        assert reference_period(o) == (0, 2)

    def test_fixed_point(self):
        assert reference_period(hamiltonian_orientation(3)) == (0, 1)

    def test_agrees_with_evolve_on_random_corpus(self):
        rng = random.Random(20260824)
        for n in (2, 3, 4, 5):
            for _ in range(100):
                o = random_orientation(n, rng)
                result = evolve(o)
                assert reference_period(o) == (result.transient, result.period)

    def test_undetermined_returns_none(self):
        o = Orientation.from_direction_bits(1, [0])
        assert reference_period(o, max_steps=1) is None


class TestRandomOrientation:
    def test_seed_reproducible(self):
        a = random_orientation(5, random.Random(42))
        b = random_orientation(5, random.Random(42))
        assert a == b

    def test_different_seeds_differ(self):
        a = random_orientation(5, random.Random(1))
        b = random_orientation(5, random.Random(2))
        assert a != b


class TestCheckLemma23:
    def test_requires_order_3(self):
        with pytest.raises(ValueError):
            check_lemma23(h4_order5())

    def test_invalid_assignment_false(self):
        cand = LeftCyclicPartition.from_sets(2, [[0, 1], [2], [3]])
        assert not check_lemma23(cand)

    def test_exhaustive_h2_no_candidate_passes(self):
        # sweep all order-3 assignments of H_2's four vertices; by the
        # two-neighbor argument none can be valid
        for code in range(3 ** 4):
            labels = [(code // 3**v) % 3 for v in range(4)]
            sets = [[v for v in range(4) if labels[v] == c] for c in range(3)]
            cand = LeftCyclicPartition.from_sets(2, sets)
            assert not check_lemma23(cand)
            assert not validate(cand).valid
