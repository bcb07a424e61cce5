"""Comparison metering: probe semantics, counts, and structural metrics."""

import numpy as np
import pytest

from maxminfilter import OrderProbe, metered_run, probe_less, wedge_run


class TestOrderProbe:
    def test_counts_and_preserves_outcome(self):
        p = OrderProbe()
        assert probe_less(p, 1, 2) is True
        assert p.count == 1
        assert probe_less(p, 2, 2) is False
        assert p.count == 2

    def test_reset(self):
        p = OrderProbe()
        p.less(1, 2)
        p.reset()
        assert p.count == 0

    def test_callable_alias(self):
        p = OrderProbe()
        assert p(3, 4) is True
        assert p.count == 1


class TestMeteredRun:
    def test_unknown_algorithm(self):
        with pytest.raises(ValueError):
            metered_run("quickselect", [1.0, 2.0], 2)

    def test_metered_output_equals_plain(self):
        rng = np.random.default_rng(9)
        for trial in range(20):
            n = int(rng.integers(2, 200))
            w = int(rng.integers(1, n + 1))
            a = rng.integers(0, 4, n).astype(float)
            series, _ = metered_run("wedge", a, w, time_run=False)
            plain = wedge_run(a, w)
            assert list(series.max) == list(plain.max)
            assert list(series.min) == list(plain.min)
            assert list(series.argmax) == list(plain.argmax)
            assert list(series.argmin) == list(plain.argmin)

    def test_naive_count_is_exact(self):
        a = np.random.default_rng(0).random(50)
        for w in (1, 2, 7, 50):
            _, m = metered_run("naive", a, w, time_run=False)
            assert m.comparisons == (50 - w + 1) * 2 * (w - 1)

    def test_wedge_monotonic_bound(self):
        ramp = np.arange(1000, dtype=float)
        for a in (ramp, ramp[::-1].copy()):
            _, m = metered_run("wedge", a, 50, time_run=False)
            assert m.comparisons <= 2000

    def test_wedge_peak_size_bound(self):
        rng = np.random.default_rng(4)
        for w in (2, 5, 20):
            a = rng.integers(0, 3, 500).astype(float)
            _, m = metered_run("wedge", a, w, time_run=False)
            assert m.peak_wedge_size <= w + 1

    def test_wedge_universal_ceiling(self):
        # provable worst case for the lazy-tie wedge: 4n - 4
        rng = np.random.default_rng(8)
        for trial in range(30):
            n = int(rng.integers(2, 300))
            w = int(rng.integers(2, n + 1))
            a = rng.integers(0, 3, n).astype(float)
            _, m = metered_run("wedge", a, w, time_run=False)
            assert m.comparisons <= 4 * n - 4

    def test_w3_count_ceiling(self):
        rng = np.random.default_rng(3)
        for a in (
            rng.integers(0, 3, 200).astype(float),
            np.full(200, 1.0),
            np.arange(200, dtype=float),
        ):
            _, m = metered_run("w3", a, 3, time_run=False)
            assert m.comparisons <= 2 * len(a) - 2

    def test_wedge_uniform_3n(self):
        a = np.random.default_rng(0).random(10_000)
        _, m = metered_run("wedge", a, 100, time_run=False)
        assert m.comparisons <= 30_000

    def test_zero_latency_metadata(self):
        a = np.random.default_rng(1).random(64)
        for algo in ("wedge", "naive", "w3"):
            _, m = metered_run(algo, a, 8 if algo != "w3" else 3, time_run=False)
            assert m.emit_lag_max == 0

    def test_wall_time_populated(self):
        a = np.random.default_rng(2).random(1000)
        _, m = metered_run("wedge", a, 10, time_run=True)
        assert m.wall_time_s > 0.0

    def test_comparisons_per_element(self):
        a = np.random.default_rng(6).random(500)
        _, m = metered_run("wedge", a, 10, time_run=False)
        assert m.comparisons_per_element == m.comparisons / 500
