# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled float64 kernels for the hot filter loops.

Mirrors the signatures in ``_fast_py``; selected at import time by
``_backend`` when the compiled module is available.
"""

import numpy as np


BACKEND = "ext"


def wedge_minmax(double[::1] a, Py_ssize_t w):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t nwin = n - w + 1
    omax_arr = np.empty(nwin)
    omin_arr = np.empty(nwin)
    amax_arr = np.empty(nwin, dtype=np.int64)
    amin_arr = np.empty(nwin, dtype=np.int64)
    cdef double[::1] omax = omax_arr
    cdef double[::1] omin = omin_arr
    cdef long long[::1] amax = amax_arr
    cdef long long[::1] amin = amin_arr
    cdef Py_ssize_t i, j
    if w == 1:
        for i in range(n):
            omax[i] = a[i]
            omin[i] = a[i]
            amax[i] = i
            amin[i] = i
        return omax_arr, omin_arr, amax_arr, amin_arr
    # Candidate index deques; strict pops keep equal-valued candidates,
    # so the fronts are always the earliest positions attaining the
    # extrema.  Every index is appended at most once per queue over the
    # whole input, so plain length-n arrays with head/tail cursors give
    # deques without any wrap-around arithmetic.
    uq_arr = np.empty(n, dtype=np.intp)
    lq_arr = np.empty(n, dtype=np.intp)
    cdef Py_ssize_t[::1] uq = uq_arr
    cdef Py_ssize_t[::1] lq = lq_arr
    cdef Py_ssize_t uh = 0, ut = 1  # head, tail (exclusive)
    cdef Py_ssize_t lh = 0, lt = 1
    cdef double x
    uq[0] = 0
    lq[0] = 0
    for i in range(1, n):
        x = a[i]
        while ut > uh and a[uq[ut - 1]] < x:
            ut -= 1
        uq[ut] = i
        ut += 1
        while lt > lh and x < a[lq[lt - 1]]:
            lt -= 1
        lq[lt] = i
        lt += 1
        if uq[uh] == i - w:
            uh += 1
        if lq[lh] == i - w:
            lh += 1
        if i >= w - 1:
            j = i - w + 1
            amax[j] = uq[uh]
            amin[j] = lq[lh]
            omax[j] = a[uq[uh]]
            omin[j] = a[lq[lh]]
    return omax_arr, omin_arr, amax_arr, amin_arr


def naive_minmax(double[::1] a, Py_ssize_t w):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t nwin = n - w + 1
    omax_arr = np.empty(nwin)
    omin_arr = np.empty(nwin)
    amax_arr = np.empty(nwin, dtype=np.int64)
    amin_arr = np.empty(nwin, dtype=np.int64)
    cdef double[::1] omax = omax_arr
    cdef double[::1] omin = omin_arr
    cdef long long[::1] amax = amax_arr
    cdef long long[::1] amin = amin_arr
    cdef Py_ssize_t j, k, pm, qm
    for j in range(nwin):
        pm = j
        qm = j
        for k in range(j + 1, j + w):
            if a[pm] < a[k]:
                pm = k
            if a[k] < a[qm]:
                qm = k
        omax[j] = a[pm]
        omin[j] = a[qm]
        amax[j] = pm
        amin[j] = qm
    return omax_arr, omin_arr, amax_arr, amin_arr


def vhgw_minmax(double[::1] a, Py_ssize_t w):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t nwin = n - w + 1
    omax_arr = np.empty(nwin)
    omin_arr = np.empty(nwin)
    cdef double[::1] omax = omax_arr
    cdef double[::1] omin = omin_arr
    # block-local scratch: prefix extrema of the current block, suffix
    # extrema of the previous one (4w + O(1) elements total)
    pmax_arr = np.empty(w)
    pmin_arr = np.empty(w)
    smax_arr = np.empty(w)
    smin_arr = np.empty(w)
    cdef double[::1] pmax = pmax_arr
    cdef double[::1] pmin = pmin_arr
    cdef double[::1] smax = smax_arr
    cdef double[::1] smin = smin_arr
    cdef Py_ssize_t nb = (n + w - 1) // w
    cdef Py_ssize_t b, start, end, pstart, j, k, e, blen
    cdef double x, sm, sn, px, pn
    pstart = 0
    for b in range(nb):
        start = b * w
        end = start + w
        if end > n:
            end = n
        blen = end - start
        pmax[0] = a[start]
        pmin[0] = a[start]
        for k in range(1, blen):
            x = a[start + k]
            pmax[k] = x if pmax[k - 1] < x else pmax[k - 1]
            pmin[k] = x if x < pmin[k - 1] else pmin[k - 1]
        if b > 0:
            j = pstart + 1
            while j < start and j < nwin:
                e = j + w - 1 - start
                sm = smax[j - pstart - 1]
                sn = smin[j - pstart - 1]
                px = pmax[e]
                pn = pmin[e]
                omax[j] = px if sm < px else sm
                omin[j] = pn if pn < sn else sn
                j += 1
        if start < nwin and blen == w:
            omax[start] = pmax[w - 1]
            omin[start] = pmin[w - 1]
        if blen >= 2:
            # suffix extrema over a[start+1 : end], stored from index start+1
            smax[blen - 2] = a[end - 1]
            smin[blen - 2] = a[end - 1]
            for k in range(blen - 3, -1, -1):
                x = a[start + 1 + k]
                smax[k] = x if smax[k + 1] < x else smax[k + 1]
                smin[k] = x if x < smin[k + 1] else smin[k + 1]
        pstart = start
    return omax_arr, omin_arr
