import itertools
import random

import numpy as np
import pytest

from chanassign import _windows
from chanassign.decision import (WorkCounter, covering_tuples, decide_span, decode_window,
                                 dp_layers, encode_window, min_span, proper_frontier,
                                 tuples_count, window_is_proper)
from chanassign.instance import Instance, random_instance, span_upper_bound
from chanassign.oracle import brute_decide, brute_min_span, brute_tuples_count
from chanassign.subsetalg import enumerate_subsets, members, popcount

from conftest import random_family

X0, Y0 = 0b01, 0b10


class TestWindowPredicates:
    def test_empty_window_is_proper(self, tri2):
        assert window_is_proper(tri2, (0,))
        assert window_is_proper(tri2, (0, 0, 0))

    def test_set_must_be_internally_independent(self):
        inst = Instance.from_pairs(2, {(0, 1): 1})
        assert not window_is_proper(inst, (X0 | Y0,))

    def test_gap_between_sets(self):
        inst = Instance.from_pairs(2, {(0, 1): 1})
        assert window_is_proper(inst, (X0, Y0))
        inst = Instance.from_pairs(2, {(0, 1): 2})
        assert not window_is_proper(inst, (X0, Y0))
        assert window_is_proper(inst, (X0, 0, Y0))

    def test_frontier_examples(self):
        inst = Instance.from_pairs(2, {(0, 1): 2})
        assert proper_frontier(inst, (0,)) == 0b11
        assert proper_frontier(inst, (X0,)) == 0
        inst = Instance.from_pairs(2, {(0, 1): 1})
        assert proper_frontier(inst, (X0, 0)) == Y0

    def test_encode_decode(self):
        ground = 0b101101
        for idx in range(3 ** 4):
            window = decode_window(idx, ground, 3)
            assert encode_window(window, ground, 3) == idx
        with pytest.raises(ValueError):
            encode_window((0b1, 0b1), 0b1, 3)
        with pytest.raises(ValueError):
            encode_window((0b10,), 0b1, 2)

    @pytest.mark.parametrize("seed", range(6))
    def test_vectorised_tables_match_definitions(self, seed):
        rng = random.Random(seed)
        n = rng.randint(3, 6)
        inst = random_instance(n, rng.randint(2, 4), seed=seed)
        ell = max(inst.ell, 2)
        X = rng.randrange(1 << n)
        xs = members(X)
        space = _windows.WindowSpace(inst.weights[np.ix_(xs, xs)], ell)
        for idx in range(space.n_states):
            window = decode_window(idx, X, ell)
            assert space.proper[idx] == window_is_proper(inst, window)
            front = proper_frontier(inst, window) & X
            pred = (front,) + window[:-1]
            assert space.lookup[idx] == encode_window(pred, X, ell)


class TestTuplesCount:
    def test_empty_ground(self, tri2):
        for s in range(1, 5):
            assert tuples_count(tri2, 0, s) == 1

    def test_examples(self, two):
        # DERIVED by brute_tuples_count: sequences over {x} with no two adjacent
        assert brute_tuples_count(two, X0, 3) == 5
        assert tuples_count(two, X0, 3) == 5
        assert brute_tuples_count(two, X0 | Y0, 1) == 3
        assert tuples_count(two, X0 | Y0, 1) == 3

    def test_fibonacci_without_constraints(self):
        inst = Instance([[0]])
        got = [tuples_count(inst, 1, s, ell=2) for s in range(1, 8)]
        assert got == [2, 3, 5, 8, 13, 21, 34]
        assert got[:5] == [brute_tuples_count(inst, 1, s, ell=2) for s in range(1, 6)]

    def test_ell_override_must_not_shrink(self, tri2):
        with pytest.raises(ValueError):
            tuples_count(tri2, 0b111, 2, ell=1)

    @pytest.mark.parametrize("seed", range(8))
    def test_matches_brute_force(self, seed):
        inst = random_family(1, seed=seed, sizes=(3, 4))[0]
        for X in enumerate_subsets((1 << inst.n) - 1):
            if popcount(X) > 2:
                continue
            for s in range(1, 4):
                assert tuples_count(inst, X, s) == brute_tuples_count(inst, X, s)

    @pytest.mark.parametrize("ell, s", [(3, 1), (4, 1), (4, 2), (5, 3)])
    def test_span_shorter_than_window(self, ell, s):
        inst = Instance.from_pairs(3, {(0, 1): 2, (1, 2): 1})
        for X in (0b011, 0b110, 0b111):
            assert tuples_count(inst, X, s, ell=ell) == brute_tuples_count(inst, X, s, ell=ell)

    def test_ell_one_is_power_of_independent_sets(self, tri1):
        # independent subsets of a triangle: the empty set and the three singletons
        assert tuples_count(tri1, 0b111, 3) == 4 ** 3
        assert tuples_count(tri1, 0b111, 2) == brute_tuples_count(tri1, 0b111, 2)

    @pytest.mark.parametrize("seed", range(4))
    def test_trivial_upper_bound(self, seed):
        inst = random_instance(5, 3, seed=seed)
        for X in (0b111, 0b11111):
            for s in (2, 5):
                assert 0 <= tuples_count(inst, X, s) <= 2 ** (popcount(X) * s)


class TestLayers:
    @pytest.mark.parametrize("ell", [2, 3, 4])
    def test_layer_work_matches_window_count(self, ell):
        inst = random_instance(5, ell, seed=ell)
        ell = max(ell, inst.ell)
        X = 0b10111
        k = popcount(X)
        counter = WorkCounter()
        s = ell + 3
        tuples_count(inst, X, s, ell=ell, counter=counter)
        assert counter.layer_cells == [ell ** k] * (s - (ell - 1))
        # one Yates pass per group (J_1..J_{ell-2}); a ground of size g costs g*2^(g-1)
        per_layer = 0
        for labels in itertools.product(range(ell - 1), repeat=k):
            g = labels.count(0)
            per_layer += g * 2 ** (g - 1) if g else 0
        assert counter.zeta_additions == per_layer * (s - (ell - 1))

    def test_layers_nonnegative_and_zero_on_improper(self, tri2):
        X = 0b111
        for layer in dp_layers(tri2, X, 5):
            assert np.all(layer.values >= 0)
            for idx, val in enumerate(layer.values):
                if not window_is_proper(tri2, decode_window(idx, X, 2)):
                    assert val == 0

    def test_dtype_paths_agree(self):
        inst = random_instance(5, 3, seed=11)
        xs = list(range(5))
        space = _windows.WindowSpace(inst.weights, 3)
        a = list(_windows.iterate_layers(space, 6, dtype=np.int64))[-1][1]
        b = list(_windows.iterate_layers(space, 6, dtype=object))[-1][1]
        assert b.dtype == object and [int(x) for x in a] == list(b)
        assert _windows.value_dtype(len(xs), 60, 2) is object

    def test_occupancy_patterns(self):
        assert [_windows.occupancy_patterns(s, 2) for s in range(1, 7)] == [2, 3, 5, 8, 13, 21]
        assert _windows.occupancy_patterns(4, 1) == 16
        assert _windows.occupancy_patterns(2, 3) == 3


class TestDecide:
    def test_examples(self, two, tri2):
        assert decide_span(Instance([[0]]), 1)
        assert not decide_span(two, 2) and decide_span(two, 3)
        assert not decide_span(tri2, 4) and decide_span(tri2, 5)
        assert brute_decide(tri2, 5) and not brute_decide(tri2, 4)

    def test_min_span_examples(self, two, tri2):
        assert min_span(Instance.from_pairs(4, {})) == 1
        assert min_span(two) == 3
        assert min_span(tri2) == brute_min_span(tri2) == 5

    def test_rejects_bad_span(self, two):
        for s in (0, -1, 1.5):
            with pytest.raises(ValueError):
                decide_span(two, s)

    @pytest.mark.parametrize("seed", range(40))
    def test_properties_on_random_family(self, seed):
        inst = random_family(1, seed=seed)[0]
        ub = span_upper_bound(inst)
        answers = [decide_span(inst, s) for s in range(1, ub + 1)]
        assert answers[-1]
        assert answers == sorted(answers)
        for s in range(1, ub + 1):
            assert covering_tuples(inst, s) >= 0

    def test_ell_one_is_chromatic_number(self, c5, tri1):
        assert min_span(c5) == 3 and min_span(tri1) == 3
        bip = Instance.from_pairs(4, {(0, 1): 1, (1, 2): 1, (2, 3): 1, (3, 0): 1})
        assert min_span(bip) == 2

    def test_parallel_matches_sequential(self):
        inst = random_instance(7, 2, seed=3, density=0.6)
        s = min_span(inst)
        for t in (s - 1, s):
            assert covering_tuples(inst, t, n_jobs=2) == covering_tuples(inst, t)
