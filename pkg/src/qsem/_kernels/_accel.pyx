# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled triplet kernels; must stay bit-identical to fallback.py."""

import numpy as np

cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t

cnp.import_array()


cdef int64_t _pair_budget(int64_t length, int64_t window) noexcept nogil:
    # number of (i, j) pairs with 0 < i-j <= window inside one span
    if length > window:
        return length * window - window * (window + 1) // 2
    return length * (length - 1) // 2


def hal_pairs(int32_t[::1] tokens, int64_t[::1] offsets, int window):
    cdef Py_ssize_t ndocs = offsets.shape[0] - 1
    cdef int64_t total = 0
    cdef Py_ssize_t d
    for d in range(ndocs):
        total += _pair_budget(offsets[d + 1] - offsets[d], window)

    rows = np.empty(total, dtype=np.int32)
    cols = np.empty(total, dtype=np.int32)
    wts = np.empty(total, dtype=np.int64)
    cdef int32_t[::1] rv = rows
    cdef int32_t[::1] cv = cols
    cdef int64_t[::1] wv = wts

    cdef Py_ssize_t k = 0, start, end, i, j, lo
    with nogil:
        for d in range(ndocs):
            start = offsets[d]
            end = offsets[d + 1]
            for i in range(start + 1, end):
                lo = i - window
                if lo < start:
                    lo = start
                for j in range(lo, i):
                    rv[k] = tokens[i]
                    cv[k] = tokens[j]
                    wv[k] = window + 1 - (i - j)
                    k += 1
    return rows, cols, wts


def centered_pairs(int32_t[::1] tokens, int64_t[::1] offsets, int target,
                   int radius, int window):
    cdef Py_ssize_t ndocs = offsets.shape[0] - 1
    cdef int64_t total = 0
    cdef Py_ssize_t d, start, end, p, lo, hi
    with nogil:
        for d in range(ndocs):
            start = offsets[d]
            end = offsets[d + 1]
            for p in range(start, end):
                if tokens[p] != target:
                    continue
                lo = p - radius
                if lo < start:
                    lo = start
                hi = p + radius
                if hi >= end:
                    hi = end - 1
                total += _pair_budget(hi - lo + 1, window)

    rows = np.empty(total, dtype=np.int32)
    cols = np.empty(total, dtype=np.int32)
    wts = np.empty(total, dtype=np.int64)
    cdef int32_t[::1] rv = rows
    cdef int32_t[::1] cv = cols
    cdef int64_t[::1] wv = wts

    cdef Py_ssize_t k = 0, i, j, jlo
    with nogil:
        for d in range(ndocs):
            start = offsets[d]
            end = offsets[d + 1]
            for p in range(start, end):
                if tokens[p] != target:
                    continue
                lo = p - radius
                if lo < start:
                    lo = start
                hi = p + radius
                if hi >= end:
                    hi = end - 1
                for i in range(lo + 1, hi + 1):
                    jlo = i - window
                    if jlo < lo:
                        jlo = lo
                    for j in range(jlo, i):
                        rv[k] = tokens[i]
                        cv[k] = tokens[j]
                        wv[k] = window + 1 - (i - j)
                        k += 1
    return rows, cols, wts


def global_pairs(int32_t[::1] tokens, int64_t[::1] offsets, int radius, int window):
    cdef Py_ssize_t ndocs = offsets.shape[0] - 1
    cdef int64_t dmax = window
    if 2 * radius < dmax:
        dmax = 2 * radius

    cdef int64_t total = 0
    cdef Py_ssize_t d
    cdef int64_t length, dist, top
    with nogil:
        for d in range(ndocs):
            length = offsets[d + 1] - offsets[d]
            top = dmax if dmax < length - 1 else length - 1
            for dist in range(1, top + 1):
                total += length - dist

    rows = np.empty(total, dtype=np.int32)
    cols = np.empty(total, dtype=np.int32)
    wts = np.empty(total, dtype=np.int64)
    cdef int32_t[::1] rv = rows
    cdef int32_t[::1] cv = cols
    cdef int64_t[::1] wv = wts

    cdef Py_ssize_t k = 0, start, end, i
    cdef int64_t pa, hi, lo
    with nogil:
        for d in range(ndocs):
            start = offsets[d]
            end = offsets[d + 1]
            length = end - start
            for i in range(start + 1, end):
                pa = i - start
                top = dmax if dmax < pa else pa
                for dist in range(1, top + 1):
                    # slice positions covering both ends of the pair
                    hi = pa - dist + radius
                    if hi > length - 1:
                        hi = length - 1
                    lo = pa - radius
                    if lo < 0:
                        lo = 0
                    rv[k] = tokens[i]
                    cv[k] = tokens[i - dist]
                    wv[k] = (window + 1 - dist) * (hi - lo + 1)
                    k += 1
    return rows, cols, wts
