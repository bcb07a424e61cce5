"""Reference competitors: naive per-window scan and van Herk-Gil-Werman.

Both produce value-identical output to the wedge filter.  The naive scan
also reports earliest-tie argmax/argmin; the van Herk-Gil-Werman (vhgw)
baseline tracks values only, as the classic formulation does, so its
series carries no arg positions.
"""

from __future__ import annotations

import operator
from typing import Optional

import numpy as np

from .core import ExtremaSeries, Less, _check_comparable, _check_run_input, _is_fast_input

__all__ = ["naive_run", "vhgw_run"]


def naive_run(a, w: int, less: Optional[Less] = None) -> ExtremaSeries:
    """Scan every window in full: exactly ``2(w-1)`` comparisons per window.

    O(n w) overall; still the fastest option for very small windows.
    """
    _check_run_input(a, w)
    if _is_fast_input(a, less):
        from ._backend import kernels

        if np.isnan(a).any():
            raise ValueError("input contains NaN; values must be totally ordered")
        omax, omin, amax, amin = kernels.naive_minmax(a, w)
        return ExtremaSeries(w, omax, omin, amax, amin)
    less = less if less is not None else operator.lt
    n = len(a)
    for x in a:
        _check_comparable(x)
    maxv, minv, amax, amin = [], [], [], []
    for j in range(n - w + 1):
        pm = qm = j
        for k in range(j + 1, j + w):
            if less(a[pm], a[k]):
                pm = k
            if less(a[k], a[qm]):
                qm = k
        maxv.append(a[pm])
        minv.append(a[qm])
        amax.append(pm)
        amin.append(qm)
    return ExtremaSeries(w, maxv, minv, amax, amin)


def vhgw_run(a, w: int, less: Optional[Less] = None) -> ExtremaSeries:
    """van Herk-Gil-Werman block algorithm, values only.

    Splits each window extremum into a block-suffix and a block-prefix
    extremum around boundaries at multiples of ``w``.  At most ``6 - 8/w``
    comparisons per element on block-aligned input; scratch buffers hold
    O(w) elements.  The trailing partial block is processed with truncated
    prefix/suffix arrays (no sentinel padding).
    """
    _check_run_input(a, w)
    if w < 2:
        raise ValueError("vhgw requires w >= 2 (use the naive scan for w = 1)")
    if _is_fast_input(a, less):
        from ._backend import kernels

        if np.isnan(a).any():
            raise ValueError("input contains NaN; values must be totally ordered")
        omax, omin = kernels.vhgw_minmax(a, w)
        return ExtremaSeries(w, omax, omin, None, None)
    less = less if less is not None else operator.lt
    n = len(a)
    for x in a:
        _check_comparable(x)
    nwin = n - w + 1
    maxv = [None] * nwin
    minv = [None] * nwin
    nb = -(-n // w)
    # suffix extrema of the previous block, keyed by absolute index;
    # s_*[k - (pstart + 1)] covers a[k : pend]
    s_max = s_min = []
    pstart = 0
    for b in range(nb):
        start = b * w
        end = min(start + w, n)
        # prefix extrema over block b
        p_max = [a[start]] * (end - start)
        p_min = [a[start]] * (end - start)
        for k in range(start + 1, end):
            x = a[k]
            t = k - start
            p_max[t] = x if less(p_max[t - 1], x) else p_max[t - 1]
            p_min[t] = x if less(x, p_min[t - 1]) else p_min[t - 1]
        if b > 0:
            # windows starting inside the previous block (boundary start
            # was already emitted as that block's full extremum)
            for j in range(pstart + 1, min(start, nwin)):
                e = j + w - 1
                sm = s_max[j - pstart - 1]
                sn = s_min[j - pstart - 1]
                pmx = p_max[e - start]
                pmn = p_min[e - start]
                maxv[j] = pmx if less(sm, pmx) else sm
                minv[j] = pmn if less(pmn, sn) else sn
        if start <= n - w and end - start == w:
            # block-aligned window equals the full-block extremum
            maxv[start] = p_max[w - 1]
            minv[start] = p_min[w - 1]
        # suffix extrema of block b for the next iteration; index `start`
        # itself is never needed (its window used the prefix above)
        s_max = [a[end - 1]] * (end - start - 1)
        s_min = [a[end - 1]] * (end - start - 1)
        for k in range(end - 2, start, -1):
            x = a[k]
            t = k - start - 1
            s_max[t] = x if less(s_max[t + 1], x) else s_max[t + 1]
            s_min[t] = x if less(x, s_min[t + 1]) else s_min[t + 1]
        pstart = start
    return ExtremaSeries(w, maxv, minv, None, None)
