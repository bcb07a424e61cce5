"""Core wedge filter: known values, streaming semantics, properties."""

import itertools
import operator

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxminfilter import ExtremaResult, WedgeFilter, oracle_run, run_w3, wedge_run
from maxminfilter.core import _wedge_series


def series_tuple(s):
    return (list(s.max), list(s.min), list(s.argmax), list(s.argmin))


class TestKnownValues:
    def test_basic_windows(self):
        s = wedge_run(np.array([1.0, 3.0, 2.0, 5.0, 4.0]), 3)
        assert list(s.max) == [3.0, 5.0, 5.0]
        assert list(s.min) == [1.0, 2.0, 2.0]
        assert list(s.argmax) == [1, 3, 3]
        assert list(s.argmin) == [0, 2, 2]

    def test_identity_window(self):
        a = np.array([1.0, 2.0, 3.0, 4.0])
        s = wedge_run(a, 1)
        assert list(s.max) == list(a)
        assert list(s.min) == list(a)
        assert list(s.argmax) == [0, 1, 2, 3]

    def test_single_full_window(self):
        s = wedge_run(np.array([4.0, 3.0, 2.0, 1.0]), 4)
        assert list(s.max) == [4.0]
        assert list(s.min) == [1.0]
        assert list(s.argmax) == [0]
        assert list(s.argmin) == [3]

    def test_earliest_tie_both_sides(self):
        s = wedge_run(np.array([2.0, 2.0, 2.0]), 3)
        assert list(s.argmax) == [0]
        assert list(s.argmin) == [0]

    def test_duplicates_alternating(self):
        s = wedge_run(np.array([2.0, 1.0, 2.0, 1.0]), 2)
        assert list(s.max) == [2.0, 2.0, 2.0]
        assert list(s.min) == [1.0, 1.0, 1.0]
        assert list(s.argmax) == [0, 2, 2]
        assert list(s.argmin) == [1, 1, 3]


class TestValidation:
    def test_window_zero_rejected(self):
        with pytest.raises(ValueError):
            wedge_run([1.0, 2.0], 0)

    def test_window_non_integer_rejected(self):
        with pytest.raises(TypeError):
            wedge_run([1.0, 2.0], 1.5)

    def test_window_larger_than_input(self):
        with pytest.raises(ValueError):
            wedge_run([1.0, 2.0], 3)

    def test_nan_rejected_fast_path(self):
        with pytest.raises(ValueError):
            wedge_run(np.array([1.0, np.nan, 2.0]), 2)

    def test_nan_rejected_generic_path(self):
        with pytest.raises(ValueError):
            wedge_run([1.0, float("nan"), 2.0], 2)

    def test_nan_rejected_by_push(self):
        f = WedgeFilter(2)
        with pytest.raises(ValueError):
            f.push(float("nan"))


class TestStreaming:
    def test_no_emission_before_window_fills(self):
        f = WedgeFilter(3)
        assert f.push(5.0) is None
        assert f.push(4.0) is None

    def test_w1_emits_immediately_without_comparisons(self):
        calls = []

        def spy(x, y):
            calls.append((x, y))
            return x < y

        f = WedgeFilter(1, less=spy)
        r = f.push(7.0)
        assert r == ExtremaResult(0, 7.0, 7.0, 0, 0)
        assert calls == []

    def test_completing_push_emits(self):
        f = WedgeFilter(3)
        f.push(1.0)
        f.push(3.0)
        r = f.push(2.0)
        assert r is not None
        assert (r.max, r.min, r.argmax, r.argmin) == (3.0, 1.0, 1, 0)
        assert r.window_end == 2

    def test_push_equals_batch(self):
        rng = np.random.default_rng(11)
        for _ in range(25):
            n = int(rng.integers(1, 120))
            w = int(rng.integers(1, n + 1))
            a = rng.integers(0, 5, n).astype(float).tolist()
            f = WedgeFilter(w)
            emitted = [r for r in map(f.push, a) if r is not None]
            batch = wedge_run(a, w, less=operator.lt)
            assert [r.max for r in emitted] == list(batch.max)
            assert [r.min for r in emitted] == list(batch.min)
            assert [r.argmax for r in emitted] == list(batch.argmax)
            assert [r.argmin for r in emitted] == list(batch.argmin)
            assert [r.window_end for r in emitted] == [j + w - 1 for j in range(n - w + 1)]

    def test_wedge_size_bound_streaming(self):
        rng = np.random.default_rng(5)
        for w in (1, 2, 3, 8):
            f = WedgeFilter(w)
            for x in rng.integers(0, 3, 300).astype(float):
                f.push(x)
            assert f.peak_wedge_size <= w + 1

    def test_memory_stays_bounded(self):
        f = WedgeFilter(4)
        for i in range(10_000):
            f.push(float(i % 7))
        assert f.wedge_size() <= 5
        assert len(f._buf) == 5


class TestGenericTypes:
    def test_custom_comparable_type(self):
        a = ["apple", "pear", "fig", "kiwi", "date"]
        s = wedge_run(a, 3)
        o = oracle_run(a, 3)
        assert series_tuple(s) == series_tuple(o)

    def test_custom_predicate_reverses_roles(self):
        a = [3.0, 1.0, 2.0]
        s = wedge_run(a, 3, less=operator.gt)
        # with the order flipped, "max" tracks the smallest value
        assert list(s.max) == [1.0]
        assert list(s.min) == [3.0]


class TestExhaustive:
    def test_small_alphabet_all_inputs(self):
        for n in range(1, 7):
            for tup in itertools.product((0.0, 1.0, 2.0), repeat=n):
                for w in range(1, n + 1):
                    s = _wedge_series(list(tup), w, operator.lt)
                    o = oracle_run(list(tup), w)
                    assert series_tuple(s) == series_tuple(o), (tup, w)


@given(
    st.lists(st.floats(allow_nan=False, allow_infinity=False, width=32), min_size=1, max_size=80),
    st.data(),
)
@settings(max_examples=200, deadline=None)
def test_property_matches_oracle(values, data):
    w = data.draw(st.integers(1, len(values)))
    s = wedge_run(values, w)
    o = oracle_run(values, w)
    assert series_tuple(s) == series_tuple(o)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=60), st.data())
@settings(max_examples=200, deadline=None)
def test_property_tie_heavy_matches_oracle(values, data):
    a = [float(v) for v in values]
    w = data.draw(st.integers(1, len(a)))
    assert series_tuple(wedge_run(a, w)) == series_tuple(oracle_run(a, w))


def test_fast_backend_equals_generic():
    rng = np.random.default_rng(23)
    for trial in range(40):
        n = int(rng.integers(1, 400))
        w = int(rng.integers(1, n + 1))
        a = rng.integers(0, 6, n).astype(float) if trial % 2 else rng.random(n)
        fast = wedge_run(a, w)  # ndarray float64: kernel backend
        generic = _wedge_series(a.tolist(), w, operator.lt)
        assert series_tuple(fast) == series_tuple(generic)


class TestRunW3:
    def test_matches_wedge(self):
        a = np.array([1.0, 3.0, 2.0, 5.0, 4.0])
        assert series_tuple(run_w3(a)) == series_tuple(wedge_run(a, 3))

    def test_requires_three_elements(self):
        with pytest.raises(ValueError):
            run_w3([1.0, 2.0])

    def test_exhaustive_with_ties(self):
        for n in range(3, 8):
            for tup in itertools.product((0.0, 1.0, 2.0), repeat=n):
                a = list(tup)
                assert series_tuple(run_w3(a)) == series_tuple(oracle_run(a, 3)), a

    @given(st.lists(st.floats(allow_nan=False, allow_infinity=False), min_size=3, max_size=60))
    @settings(max_examples=150, deadline=None)
    def test_property_matches_oracle(self, values):
        assert series_tuple(run_w3(values)) == series_tuple(oracle_run(values, 3))
