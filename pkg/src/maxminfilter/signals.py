"""Deterministic test signals, the brute-force oracle, and equivalence checks.

Signals are pure functions of their spec: same spec, same float64
sequence, on every platform (seeded PCG64, not the platform RNG).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

import numpy as np

from .baselines import naive_run, vhgw_run
from .core import ExtremaSeries, _check_run_input, run_w3, wedge_run

__all__ = [
    "SIGNAL_KINDS",
    "SignalSpec",
    "generate",
    "oracle_run",
    "Verdict",
    "verify_equal",
    "verify_trials",
]

SIGNAL_KINDS = (
    "uniform",
    "sine",
    "ramp_up",
    "ramp_down",
    "constant",
    "piecewise",
    "alternating",
)


@dataclass(frozen=True)
class SignalSpec:
    kind: str
    n: int
    seed: int = 0
    period: int = 10_000  # sine only
    segments: int = 8  # piecewise only
    level: float = 0.0  # constant only

    def __post_init__(self):
        if self.kind not in SIGNAL_KINDS:
            raise ValueError(f"unknown signal kind {self.kind!r}; expected one of {SIGNAL_KINDS}")
        if self.n < 1:
            raise ValueError(f"signal length must be >= 1, got {self.n}")
        if self.kind == "sine" and self.period < 2:
            raise ValueError(f"sine period must be >= 2, got {self.period}")
        if self.kind == "piecewise" and self.segments < 1:
            raise ValueError(f"piecewise segment count must be >= 1, got {self.segments}")


def generate(spec: SignalSpec) -> np.ndarray:
    """Generate the float64 signal described by ``spec``."""
    n = spec.n
    if spec.kind == "uniform":
        return np.random.default_rng(spec.seed).random(n)
    if spec.kind == "sine":
        return np.sin(2.0 * np.pi * np.arange(n) / spec.period)
    if spec.kind == "ramp_up":
        return np.arange(n, dtype=np.float64)
    if spec.kind == "ramp_down":
        return np.arange(n, 0, -1, dtype=np.float64)
    if spec.kind == "constant":
        return np.full(n, float(spec.level))
    if spec.kind == "alternating":
        return (np.arange(n) % 2).astype(np.float64)
    # piecewise: concatenated monotone segments, alternating direction
    rng = np.random.default_rng(spec.seed)
    bounds = np.linspace(0, n, spec.segments + 1).astype(int)
    parts = []
    for s in range(spec.segments):
        seg = np.sort(rng.random(bounds[s + 1] - bounds[s]))
        parts.append(seg if s % 2 == 0 else seg[::-1])
    return np.concatenate(parts) if parts else np.empty(0)


def oracle_run(a, w: int) -> ExtremaSeries:
    """Ground-truth per-window scan, independent of every filter under test.

    Uses builtin ``max``/``min`` plus ``list.index`` for earliest-tie arg
    positions; deliberately shares no code with the algorithms it checks.
    """
    _check_run_input(a, w)
    vals = list(a)
    maxv, minv, amax, amin = [], [], [], []
    for j in range(len(vals) - w + 1):
        win = vals[j : j + w]
        mx = max(win)
        mn = min(win)
        maxv.append(mx)
        minv.append(mn)
        amax.append(j + win.index(mx))
        amin.append(j + win.index(mn))
    return ExtremaSeries(w, maxv, minv, amax, amin)


@dataclass
class Verdict:
    """Outcome of a series comparison, with the first divergence if any."""

    equal: bool
    index: Optional[int] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.equal


def _entry(series: ExtremaSeries, j: int, with_args: bool):
    if with_args and series.argmax is not None:
        return (series.max[j], series.min[j], series.argmax[j], series.argmin[j])
    return (series.max[j], series.min[j])


def verify_equal(x: ExtremaSeries, y: ExtremaSeries, compare_args: bool = True) -> Verdict:
    """Exact equality of two series; floats must match bit-for-bit.

    Arg positions are compared only when ``compare_args`` is true and both
    series carry them.  A length mismatch is a mismatch verdict, not an
    error.
    """
    if len(x) != len(y):
        return Verdict(False, None, f"length mismatch: {len(x)} vs {len(y)}")
    with_args = compare_args and x.argmax is not None and y.argmax is not None
    for j in range(len(x)):
        ex = _entry(x, j, with_args)
        ey = _entry(y, j, with_args)
        if ex != ey:
            return Verdict(False, j, f"window {j}: {ex} != {ey}")
    return Verdict(True)


_DEFAULT_ALGOS = ("wedge", "naive", "vhgw", "w3")


def _run_algo(algo: str, a, w: int) -> ExtremaSeries:
    if algo == "wedge":
        return wedge_run(a, w)
    if algo == "naive":
        return naive_run(a, w)
    if algo == "vhgw":
        return vhgw_run(a, w) if w >= 2 else naive_run(a, w)
    if algo == "w3":
        return run_w3(a)
    raise ValueError(f"unknown algorithm {algo!r}")


def verify_trials(
    trials: int = 1000,
    seed: int = 0,
    algos: Sequence[str] = _DEFAULT_ALGOS,
    run=None,
    max_n: int = 256,
):
    """Randomized oracle-equivalence suite over all algorithms.

    Each trial draws ``n`` in [1, max_n], ``w`` in [1, n] and elements
    either from a continuous range or from the small alphabet {0..7} (to
    force ties).  Returns ``(failures, total_checks)`` where failures is a
    list of human-readable mismatch descriptions.

    ``run(algo, a, w)`` may be injected for harness self-tests.
    """
    run = run or _run_algo
    rng = np.random.default_rng(seed)
    failures = []
    checks = 0
    for t in range(trials):
        n = int(rng.integers(1, max_n + 1))
        w = int(rng.integers(1, n + 1))
        tie_heavy = bool(rng.integers(0, 2))
        if tie_heavy:
            a = rng.integers(0, 8, n).astype(np.float64)
        else:
            a = rng.random(n)
        expected = oracle_run(a, w)
        for algo in algos:
            if algo == "w3":
                if n < 3:
                    continue
                got = run(algo, a, 3)
                want = oracle_run(a, 3) if w != 3 else expected
                verdict = verify_equal(got, want)
            else:
                got = run(algo, a, w)
                verdict = verify_equal(got, expected, compare_args=algo != "vhgw")
            checks += 1
            if not verdict:
                failures.append(
                    f"trial {t} (n={n}, w={w}, tie_heavy={tie_heavy}) algo={algo}: {verdict.detail}"
                )
    return failures, checks
