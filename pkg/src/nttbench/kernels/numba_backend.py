"""Numba-jitted implementations of the hot integer kernels.

Signatures and numeric contracts mirror numpy_backend exactly; see there
for the overflow bounds. Matrix-vector rows are distributed over threads
with prange; each row is accumulated sequentially, so results do not
depend on the thread schedule.
"""

from __future__ import annotations

import warnings

import numpy as np

# Older TBB runtimes make numba fall back to another threading layer and
# warn about it; the fallback is fine for our prange loops.
warnings.filterwarnings("ignore", message=".*TBB.*")

from numba import njit, prange

_SPLIT_BITS = 15
_SPLIT_MASK = (1 << _SPLIT_BITS) - 1


@njit(cache=True)
def nwc_schoolbook_kernel(a, b, q):
    n = a.shape[0]
    c = np.zeros(n, dtype=np.int64)
    for i in range(n):
        ai = a[i]
        for j in range(n):
            p = ai * b[j] % q
            k = i + j
            if k < n:
                c[k] = (c[k] + p) % q
            else:
                c[k - n] = (c[k - n] - p) % q
    return c


@njit(cache=True)
def ntt_forward_kernel(values, twiddles, q):
    x = values.copy()
    n = x.shape[0]
    count = 0
    m = 1
    t = n
    while m < n:
        t //= 2
        for i in range(m):
            j1 = 2 * i * t
            s = twiddles[m + i]
            for j in range(j1, j1 + t):
                u = x[j]
                v = x[j + t] * s % q
                x[j] = (u + v) % q
                x[j + t] = (u - v) % q
            count += t
        m *= 2
    return x, count


@njit(cache=True)
def ntt_inverse_kernel(values, inv_twiddles, n_inv, q):
    x = values.copy()
    n = x.shape[0]
    count = 0
    m = n
    t = 1
    while m > 1:
        h = m // 2
        j1 = 0
        for i in range(h):
            s = inv_twiddles[h + i]
            for j in range(j1, j1 + t):
                u = x[j]
                v = x[j + t]
                x[j] = (u + v) % q
                x[j + t] = (u - v) * s % q
            count += t
            j1 += 2 * t
        t *= 2
        m = h
    for j in range(n):
        x[j] = x[j] * n_inv % q
    return x, count


@njit(cache=True)
def pointwise_mul_kernel(a, b, q):
    n = a.shape[0]
    out = np.empty(n, dtype=np.int64)
    for i in range(n):
        out[i] = a[i] * b[i] % q
    return out


@njit(cache=True, parallel=True)
def matvec_reduced_kernel(m, v, q):
    rows = m.shape[0]
    cols = m.shape[1]
    out = np.empty(rows, dtype=np.int64)
    for i in prange(rows):
        acc = np.int64(0)
        for j in range(cols):
            acc += m[i, j] * v[j] % q
        out[i] = acc % q
    return out


@njit(cache=True, parallel=True)
def matvec_split_kernel(m, v, q):
    rows = m.shape[0]
    cols = m.shape[1]
    shift = (1 << _SPLIT_BITS) % q
    out = np.empty(rows, dtype=np.int64)
    for i in prange(rows):
        lo = np.int64(0)
        hi = np.int64(0)
        for j in range(cols):
            lo += m[i, j] * (v[j] & _SPLIT_MASK)
            hi += m[i, j] * (v[j] >> _SPLIT_BITS)
        out[i] = (lo % q + hi % q * shift) % q
    return out
