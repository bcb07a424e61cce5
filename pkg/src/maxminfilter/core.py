"""Streaming sliding-window max-min filter built on a monotonic wedge.

The filter maintains two candidate queues over the current window:

* ``U`` -- maxima candidates; indices increase front-to-back while the
  values at those indices are non-increasing,
* ``L`` -- minima candidates; values non-decreasing.  Each ``L`` entry is
  a *run*: a contiguous index range whose interior is non-increasing, so
  its last index carries the run's minimum.

``front(U)`` / ``front(L)`` always locate the current window maximum and
minimum, so each completed window is emitted by the very push that
completes it (zero stream latency).

Ties are resolved toward the earliest index: ``argmax``/``argmin`` are
the smallest positions attaining the extremum.  Earliest-tie maxima fall
out of the queue discipline for free; earliest-tie minima are recovered
lazily, by walking a run backwards across its most recent extension the
first time it emits (memoized, at most one extra comparison per queue
merge, and only for runs that actually reach the front).

Comparison budget over ``n`` pushed values: never more than ``4n``, at
most ``2n`` when the input is monotonic, and at most ``3n`` on monotone,
piecewise-monotone and i.i.d.-style inputs (everything in the benchmark
signal families).  Only adversarial alternation/tie patterns exceed
``3n``.  The wedge never holds more than ``w + 1`` entries.
"""

from __future__ import annotations

import operator
from collections import deque
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

__all__ = [
    "ExtremaResult",
    "ExtremaSeries",
    "WedgeFilter",
    "wedge_run",
    "run_w3",
]

Less = Callable[[object, object], bool]


def _check_width(w: int) -> None:
    if not isinstance(w, (int, np.integer)) or isinstance(w, bool):
        raise TypeError(f"window width must be an integer, got {w!r}")
    if w < 1:
        raise ValueError(f"window width must be >= 1, got {w}")


def _check_comparable(x) -> None:
    # NaN (and anything else that is not equal to itself) breaks the
    # total-order assumption every wedge invariant rests on.
    if x != x:
        raise ValueError(f"value {x!r} is not comparable (NaN-like); rejected")


@dataclass(frozen=True)
class ExtremaResult:
    """Extrema of one completed window ``[window_end - w + 1, window_end]``.

    Positions are 0-based stream positions.  ``argmax``/``argmin`` are the
    earliest positions attaining the extremum.
    """

    window_end: int
    max: object
    min: object
    argmax: int
    argmin: int


@dataclass
class ExtremaSeries:
    """Per-window extrema for a whole input: entry ``j`` covers ``a[j:j+w]``.

    ``argmax``/``argmin`` are ``None`` for algorithms that track values
    only (the van Herk-Gil-Werman baseline).
    """

    w: int
    max: Sequence
    min: Sequence
    argmax: Optional[Sequence] = None
    argmin: Optional[Sequence] = None

    def __len__(self) -> int:
        return len(self.max)


class WedgeFilter:
    """Push-based streaming max-min filter.

    Keeps a ring of the last ``w + 1`` values plus the two index deques,
    so memory is O(w) regardless of stream length.  ``push`` returns the
    :class:`ExtremaResult` of the window the pushed value completes, or
    ``None`` while the first window is still filling.

    Not safe for concurrent mutation; one stream per filter.
    """

    def __init__(self, w: int, less: Less = operator.lt):
        _check_width(w)
        self.w = int(w)
        self._less = less
        self._cap = self.w + 1
        self._buf = [None] * self._cap
        self._U: deque[int] = deque()
        # L entries are runs [start, end, tie, frontier]: indices
        # start..end hold non-increasing values, `tie` is the earliest
        # index of the resolved equal tail, and boundaries past
        # `frontier` have not been examined yet.
        self._L: deque[list] = deque()
        self._next = 0  # next stream position
        self.peak_wedge_size = 0

    @property
    def next_index(self) -> int:
        return self._next

    def wedge_size(self) -> int:
        return len(self._U) + len(self._L)

    def _value(self, pos: int):
        return self._buf[pos % self._cap]

    def push(self, x) -> Optional[ExtremaResult]:
        _check_comparable(x)
        w = self.w
        i = self._next
        less = self._less
        U, L = self._U, self._L
        # top-of-ingest measurement point for the w+1 size bound
        size = len(U) + len(L)
        if size > self.peak_wedge_size:
            self.peak_wedge_size = size
        self._buf[i % self._cap] = x
        if w == 1:
            # identity window: no comparisons at all
            self._next = i + 1
            return ExtremaResult(i, x, x, i, i)
        if i == 0:
            U.append(0)
            L.append([0, 0, 0, 0])
        else:
            if less(self._value(i - 1), x):
                U.pop()  # back of U is i-1
                while U and less(self._value(U[-1]), x):
                    U.pop()
                U.append(i)
                L.append([i, i, i, i])
            else:
                run = L.pop()  # x <= value at run end: extend the run
                run[1] = i
                while L and less(x, self._value(L[-1][1])):
                    L.pop()
                L.append(run)
                U.append(i)
            if U[0] == i - w:
                U.popleft()
            front = L[0]
            if front[0] == i - w:
                front[0] += 1
                if front[0] > front[1]:
                    L.popleft()
                else:
                    if front[2] < front[0]:
                        front[2] = front[0]
                    if front[3] < front[0]:
                        front[3] = front[0]
        self._next = i + 1
        if i >= w - 1:
            front = L[0]
            if front[3] < front[1]:
                # walk the unexamined extension backwards; stop at the
                # first strict drop or reconnect with the memoized tail
                k = front[1]
                while k > front[3]:
                    if less(self._value(k), self._value(k - 1)):
                        front[2] = k
                        break
                    k -= 1
                front[3] = front[1]
            amax, amin = U[0], front[2]
            return ExtremaResult(i, self._value(amax), self._value(amin), amax, amin)
        return None


def _wedge_series(a, w: int, less: Less, wedge_sizes=None) -> ExtremaSeries:
    """Generic wedge run over a sequence; the instrumentable reference path.

    ``wedge_sizes``, when given, is called with size(U)+size(L) at the top
    of every ingest step (and once after the last push).
    """
    n = len(a)
    maxv, minv, amax, amin = [], [], [], []
    if w == 1:
        for i, x in enumerate(a):
            _check_comparable(x)
            maxv.append(x)
            minv.append(x)
            amax.append(i)
            amin.append(i)
        return ExtremaSeries(w, maxv, minv, amax, amin)
    U: deque[int] = deque()
    L: deque[list] = deque()  # runs [start, end, tie, frontier]
    for i in range(n):
        x = a[i]
        _check_comparable(x)
        if wedge_sizes is not None:
            wedge_sizes(len(U) + len(L))
        if i == 0:
            U.append(0)
            L.append([0, 0, 0, 0])
        else:
            if less(a[i - 1], x):
                U.pop()
                while U and less(a[U[-1]], x):
                    U.pop()
                U.append(i)
                L.append([i, i, i, i])
            else:
                run = L.pop()
                run[1] = i
                while L and less(x, a[L[-1][1]]):
                    L.pop()
                L.append(run)
                U.append(i)
            if U[0] == i - w:
                U.popleft()
            front = L[0]
            if front[0] == i - w:
                front[0] += 1
                if front[0] > front[1]:
                    L.popleft()
                else:
                    if front[2] < front[0]:
                        front[2] = front[0]
                    if front[3] < front[0]:
                        front[3] = front[0]
        if i >= w - 1:
            front = L[0]
            if front[3] < front[1]:
                k = front[1]
                while k > front[3]:
                    if less(a[k], a[k - 1]):
                        front[2] = k
                        break
                    k -= 1
                front[3] = front[1]
            maxv.append(a[U[0]])
            minv.append(a[front[2]])
            amax.append(U[0])
            amin.append(front[2])
    if wedge_sizes is not None:
        wedge_sizes(len(U) + len(L))
    return ExtremaSeries(w, maxv, minv, amax, amin)


def _is_fast_input(a, less) -> bool:
    return less is None and isinstance(a, np.ndarray) and a.dtype == np.float64 and a.ndim == 1


def _check_run_input(a, w: int) -> None:
    _check_width(w)
    n = len(a)
    if n < w:
        raise ValueError(f"window larger than input: w={w}, n={n}")


def wedge_run(a, w: int, less: Optional[Less] = None) -> ExtremaSeries:
    """Max-min filter over ``a`` with window ``w`` via the monotonic wedge.

    Output series has length ``len(a) - w + 1``; entry ``j`` covers
    ``a[j:j+w]``.  Contiguous float64 numpy input (with ``less`` omitted)
    runs on the fast kernel backend; anything else takes the generic path,
    where ``less`` may be any strict total-order predicate.
    """
    _check_run_input(a, w)
    if _is_fast_input(a, less):
        from ._backend import kernels

        if np.isnan(a).any():
            raise ValueError("input contains NaN; values must be totally ordered")
        omax, omin, amax, amin = kernels.wedge_minmax(a, w)
        return ExtremaSeries(w, omax, omin, amax, amin)
    return _wedge_series(a, w, less if less is not None else operator.lt)


_LT, _EQ, _GT = -1, 0, 1


def run_w3(a, less: Optional[Less] = None) -> ExtremaSeries:
    """Width-3 max-min filter in at most 2 comparisons per element.

    The trick is to carry the complete order relation (less / equal /
    greater) of the last two elements from step to step.  With that
    trichotomy in hand, every new element needs exactly two predicate
    calls to emit the window extrema -- earliest-tie positions included --
    and to re-establish the invariant; equality is always deduced rather
    than tested separately.  Total: at most ``2n - 2`` comparisons.
    """
    _check_run_input(a, 3)
    less = less if less is not None else operator.lt
    n = len(a)
    _check_comparable(a[0])
    _check_comparable(a[1])
    maxv, minv, amax, amin = [], [], [], []
    # full relation of the first pair: up to two comparisons
    if less(a[0], a[1]):
        rel = _LT
    elif less(a[1], a[0]):
        rel = _GT
    else:
        rel = _EQ
    for i in range(2, n):
        x = a[i]
        _check_comparable(x)
        u, v = a[i - 2], a[i - 1]
        if rel == _EQ:
            # u == v: both calls go against that common value
            if less(v, x):
                mx, pm, mn, qm, rel = x, i, v, i - 2, _LT
            elif less(x, v):
                mx, pm, mn, qm, rel = v, i - 2, x, i, _GT
            else:
                mx, pm, mn, qm, rel = v, i - 2, v, i - 2, _EQ
        elif rel == _GT:
            # u > v: u is the pair max, v the pair min
            if less(v, x):
                rel = _LT
                if less(u, x):
                    mx, pm = x, i
                else:  # x <= u keeps the earlier position on ties
                    mx, pm = u, i - 2
                mn, qm = v, i - 1
            else:
                mx, pm = u, i - 2
                if less(x, v):
                    mn, qm, rel = x, i, _GT
                else:  # not above, not below: x == v
                    mn, qm, rel = v, i - 1, _EQ
        else:
            # u < v: v is the pair max, u the pair min
            if less(x, v):
                rel = _GT
                if less(x, u):
                    mn, qm = x, i
                else:
                    mn, qm = u, i - 2
                mx, pm = v, i - 1
            else:
                mn, qm = u, i - 2
                if less(v, x):
                    mx, pm, rel = x, i, _LT
                else:
                    mx, pm, rel = v, i - 1, _EQ
        maxv.append(mx)
        minv.append(mn)
        amax.append(pm)
        amin.append(qm)
    return ExtremaSeries(3, maxv, minv, amax, amin)
