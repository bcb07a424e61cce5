"""Pure numpy/Python float64 kernels, used when the C extension is absent.

Same signatures and results as ``_fast_cy``; no instrumentation (counting
runs go through the generic predicate-based paths instead).
"""

from __future__ import annotations

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

BACKEND = "python"


def wedge_minmax(a: np.ndarray, w: int):
    n = a.shape[0]
    nwin = n - w + 1
    omax = np.empty(nwin)
    omin = np.empty(nwin)
    amax = np.empty(nwin, dtype=np.int64)
    amin = np.empty(nwin, dtype=np.int64)
    if w == 1:
        idx = np.arange(n, dtype=np.int64)
        omax[:] = a
        omin[:] = a
        return omax, omin, idx, idx.copy()
    from collections import deque

    vals = a.tolist()  # python floats: much faster scalar compares
    # strict pops keep equal-valued candidates, so the fronts are always
    # the earliest positions attaining the extrema
    U = deque([0])
    L = deque([0])
    mxl, mnl, axl, anl = [], [], [], []
    for i in range(1, n):
        x = vals[i]
        while U and vals[U[-1]] < x:
            U.pop()
        U.append(i)
        while L and x < vals[L[-1]]:
            L.pop()
        L.append(i)
        if U[0] == i - w:
            U.popleft()
        if L[0] == i - w:
            L.popleft()
        if i >= w - 1:
            mxl.append(vals[U[0]])
            mnl.append(vals[L[0]])
            axl.append(U[0])
            anl.append(L[0])
    omax[:] = mxl
    omin[:] = mnl
    amax[:] = axl
    amin[:] = anl
    return omax, omin, amax, amin


def naive_minmax(a: np.ndarray, w: int):
    win = sliding_window_view(a, w)
    amax = win.argmax(axis=1) + np.arange(win.shape[0])
    amin = win.argmin(axis=1) + np.arange(win.shape[0])
    return a[amax], a[amin], amax.astype(np.int64), amin.astype(np.int64)


def vhgw_minmax(a: np.ndarray, w: int):
    n = a.shape[0]
    nb = -(-n // w)
    m = nb * w
    # pad with the last value; padded slots are never consulted by any
    # in-range window
    ap = np.concatenate([a, np.full(m - n, a[-1])]) if m > n else a
    blocks = ap.reshape(nb, w)
    pmax = np.maximum.accumulate(blocks, axis=1).ravel()
    smax = np.maximum.accumulate(blocks[:, ::-1], axis=1)[:, ::-1].ravel()
    pmin = np.minimum.accumulate(blocks, axis=1).ravel()
    smin = np.minimum.accumulate(blocks[:, ::-1], axis=1)[:, ::-1].ravel()
    nwin = n - w + 1
    omax = np.maximum(smax[:nwin], pmax[w - 1 : w - 1 + nwin])
    omin = np.minimum(smin[:nwin], pmin[w - 1 : w - 1 + nwin])
    return omax, omin
