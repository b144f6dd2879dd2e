import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from srslab.rng import make_stream
from srslab.samplers import (draw_batch_epoch, draw_batch_replacement,
                             draw_batch_srs, init_epoch_shuffle, init_srs,
                             make_sampler, pool_histogram, refill_count,
                             srs_draw_at)


def positions_of(state, values):
    """Distinct slot positions holding the given values, in order."""
    taken: set[int] = set()
    out = []
    for v in values:
        for i, s in enumerate(state.slots):
            if s == v and i not in taken:
                taken.add(i)
                out.append(i)
                break
        else:
            raise AssertionError(f"value {v} not available in pool")
    return out


class TestInitSrs:
    def test_fresh_pool_is_one_copy_each(self):
        state = init_srs(5, 2)
        assert pool_histogram(state) == {0: 1, 1: 1, 2: 1, 3: 1, 4: 1}
        assert state.cursor == 0
        assert state.draws_completed == 0

    def test_smallest_instance(self):
        state = init_srs(1, 1)
        assert state.slots == [0]
        assert state.cursor == 0

    def test_rejects_batch_larger_than_dataset(self):
        with pytest.raises(ValueError):
            init_srs(5, 6)

    def test_rejects_zero_sizes(self):
        with pytest.raises(ValueError):
            init_srs(0, 1)
        with pytest.raises(ValueError):
            init_srs(5, 0)


class TestSrsDraw:
    def test_two_step_walkthrough(self):
        # N=5, B=2; force the draws and track the pool multiset by hand.
        state = init_srs(5, 2)
        batch = srs_draw_at(state, positions_of(state, [1, 4]))
        assert sorted(batch) == [1, 4]
        assert sorted(state.slots) == [0, 0, 1, 2, 3]
        assert pool_histogram(state) == {0: 2, 1: 1, 2: 1, 3: 1, 4: 0}
        assert state.cursor == 2

        batch = srs_draw_at(state, positions_of(state, [0, 0]))
        assert list(batch) == [0, 0]  # a duplicate pair is a legal batch
        assert sorted(state.slots) == [1, 2, 2, 3, 3]
        assert pool_histogram(state) == {0: 0, 1: 1, 2: 2, 3: 2, 4: 0}
        assert state.cursor == 4

    def test_singleton_pool_is_a_fixed_point(self):
        state = init_srs(1, 1)
        rng = make_stream(3)
        for _ in range(10):
            assert list(draw_batch_srs(state, rng)) == [0]
            assert state.slots == [0]

    def test_cursor_wraps_mid_refill(self):
        state = init_srs(5, 2)
        rng = make_stream(0)
        for _ in range(3):  # 6 refills > N=5, so the cursor wraps
            draw_batch_srs(state, rng)
        assert state.cursor == 1
        assert state.draws_completed == 3

    def test_batch_is_batch_size_long(self):
        state = init_srs(10, 3)
        rng = make_stream(1)
        for _ in range(20):
            assert draw_batch_srs(state, rng).shape == (3,)

    def test_forced_positions_must_be_distinct(self):
        state = init_srs(4, 2)
        with pytest.raises(ValueError):
            srs_draw_at(state, [1, 1])

    def test_forced_positions_must_match_batch_size(self):
        state = init_srs(4, 2)
        with pytest.raises(ValueError):
            srs_draw_at(state, [1, 2, 3])

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=1, max_value=24), st.data())
    def test_conservation_and_multiplicity_identity(self, n, data):
        b = data.draw(st.integers(min_value=1, max_value=n))
        steps = data.draw(st.integers(min_value=0, max_value=60))
        seed = data.draw(st.integers(min_value=0, max_value=2**32))
        state = init_srs(n, b)
        rng = make_stream(seed)
        drawn = np.zeros(n, dtype=np.int64)
        for _ in range(steps):
            batch = draw_batch_srs(state, rng)
            np.add.at(drawn, batch, 1)
            assert len(state.slots) == n  # conservation after every draw
        hist = pool_histogram(state)
        assert sum(hist.values()) == n
        for i in range(n):
            refills = refill_count(i, state.draws_completed, n, b)
            assert hist[i] == 1 + refills - drawn[i]

    def test_refill_fairness_bound(self):
        # refill counts across indices never differ by more than one, and
        # within a wrap the earlier index is refilled first
        for n, b, t in [(5, 2, 7), (10, 3, 100), (7, 7, 4), (16, 5, 33)]:
            counts = [refill_count(i, t, n, b) for i in range(n)]
            assert max(counts) - min(counts) <= 1
            assert all(c1 >= c2 for c1, c2 in zip(counts, counts[1:]))
            assert sum(counts) == t * b

    def test_never_drawn_index_accumulates_copies(self):
        # avoid drawing index 0 on purpose; every N/B draws add one copy
        n, b = 6, 2
        state = init_srs(n, b)
        for step in range(1, 10):
            positions = [i for i, v in enumerate(state.slots) if v != 0][:b]
            srs_draw_at(state, positions)
            assert pool_histogram(state)[0] == 1 + refill_count(0, step, n, b)
        assert pool_histogram(state)[0] == 4  # strictly grew from 1


class TestEpochShuffle:
    def test_one_epoch_partitions_when_divisible(self):
        state = init_epoch_shuffle(4, 2, make_stream(5))
        rng = make_stream(5, 1)
        seen = np.concatenate([draw_batch_epoch(state, rng) for _ in range(2)])
        assert sorted(seen) == [0, 1, 2, 3]

    def test_partial_batch_is_dropped(self):
        state = init_epoch_shuffle(5, 2, make_stream(6))
        rng = make_stream(6, 1)
        epoch = [draw_batch_epoch(state, rng) for _ in range(2)]
        seen = np.concatenate(epoch)
        assert len(set(seen.tolist())) == 4  # exactly one index unused
        # third draw starts a fresh permutation
        nxt = draw_batch_epoch(state, rng)
        assert state.position == 2
        assert len(nxt) == 2

    def test_batches_within_epoch_are_disjoint(self):
        n, b = 21, 4
        state = init_epoch_shuffle(n, b, make_stream(7))
        rng = make_stream(7, 1)
        for _ in range(3):  # three epochs
            seen = np.concatenate(
                [draw_batch_epoch(state, rng) for _ in range(n // b)]
            )
            assert len(set(seen.tolist())) == (n // b) * b

    def test_same_seed_gives_same_sequence(self):
        runs = []
        for _ in range(2):
            state = init_epoch_shuffle(9, 2, make_stream(11))
            rng = make_stream(11, 1)
            runs.append([draw_batch_epoch(state, rng).tolist()
                         for _ in range(10)])
        assert runs[0] == runs[1]


class TestBatchedReplacement:
    def test_full_batch_is_a_permutation(self):
        rng = make_stream(2)
        for _ in range(20):
            batch = draw_batch_replacement(5, 5, rng)
            assert sorted(batch) == [0, 1, 2, 3, 4]

    def test_single_draw_frequencies_are_balanced(self):
        rng = make_stream(42)
        hits = np.zeros(2, dtype=np.int64)
        for _ in range(10_000):
            hits[draw_batch_replacement(2, 1, rng)[0]] += 1
        freq = hits[0] / 10_000
        assert abs(freq - 0.5) <= 0.02

    def test_support_is_every_subset(self):
        rng = make_stream(3)
        seen = set()
        for _ in range(2_000):
            seen.add(frozenset(draw_batch_replacement(5, 2, rng).tolist()))
        assert len(seen) == 10  # C(5,2)

    def test_rejects_oversized_batch(self):
        with pytest.raises(ValueError):
            draw_batch_replacement(3, 4, make_stream(0))


class TestDeterminism:
    @pytest.mark.parametrize("kind", ["srs", "epoch", "replacement"])
    def test_identical_streams_give_identical_batches(self, kind):
        sequences = []
        for _ in range(2):
            next_batch = make_sampler(kind, 12, 5, make_stream(99, 7))
            sequences.append([next_batch().tolist() for _ in range(40)])
        assert sequences[0] == sequences[1]

    def test_distinct_stream_ids_differ(self):
        a = make_sampler("srs", 50, 10, make_stream(1, 0))
        b = make_sampler("srs", 50, 10, make_stream(1, 1))
        assert [a().tolist() for _ in range(5)] != [b().tolist()
                                                   for _ in range(5)]

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            make_sampler("bogus", 10, 2, make_stream(0))
