"""Pure-numpy implementations of the hot integer kernels.

All arrays are int64 with values in [0, q), q < 2**31. Every routine keeps
intermediates within signed 64-bit range; the bound is noted where it is
not obvious. This backend is always importable and is the fallback when
numba is unavailable or disabled.
"""

from __future__ import annotations

import numpy as np

_SPLIT_BITS = 15
_SPLIT_MASK = (1 << _SPLIT_BITS) - 1


def nwc_schoolbook_kernel(a, b, q):
    """Negacyclic convolution via two overflow-safe linear convolutions.

    b is split as b = b_lo + 2**15 * b_hi so each partial convolution sum
    stays below 2**63 for n <= 2**16: per-term products are < 2**46 (lo)
    and < 2**47 (hi). The two halves are reduced and recombined mod q,
    then the upper coefficients fold back in with a minus sign (x^n = -1).
    """
    b_lo = b & _SPLIT_MASK
    b_hi = b >> _SPLIT_BITS
    full_lo = np.convolve(a, b_lo)
    full_hi = np.convolve(a, b_hi)
    full = (full_lo % q + (full_hi % q) * ((1 << _SPLIT_BITS) % q)) % q
    n = a.shape[0]
    c = full[:n].copy()
    c[: n - 1] -= full[n:]
    return c % q


def ntt_forward_kernel(values, twiddles, q):
    """Negacyclic NTT stages, natural order in, bit-reversed order out.

    twiddles[k] holds the k-th stage multiplier (root power indexed by the
    bit-reversed stage counter). Returns (out, butterfly_count).
    """
    x = values.copy()
    n = x.shape[0]
    count = 0
    m = 1
    t = n
    while m < n:
        t //= 2
        blocks = x.reshape(m, 2, t)
        u = blocks[:, 0, :]
        v = blocks[:, 1, :] * twiddles[m : 2 * m, None] % q
        top = (u + v) % q
        bot = (u - v) % q
        blocks[:, 0, :] = top
        blocks[:, 1, :] = bot
        count += m * t
        m *= 2
    return x, count


def ntt_inverse_kernel(values, inv_twiddles, n_inv, q):
    """Inverse stages, bit-reversed order in, natural order out, scaled by n^-1."""
    x = values.copy()
    n = x.shape[0]
    count = 0
    m = n
    t = 1
    while m > 1:
        h = m // 2
        blocks = x.reshape(h, 2, t)
        u = blocks[:, 0, :]
        v = blocks[:, 1, :]
        top = (u + v) % q
        bot = (u - v) * inv_twiddles[h : 2 * h, None] % q
        blocks[:, 0, :] = top
        blocks[:, 1, :] = bot
        count += h * t
        t *= 2
        m = h
    return x * n_inv % q, count


def pointwise_mul_kernel(a, b, q):
    """Element-wise (a * b) mod q; products < 2**62."""
    return a * b % q


def matvec_reduced_kernel(m, v, q):
    """Matrix-vector product reducing every product before accumulation.

    Row sums stay below n * (q - 1) < 2**47 for n <= 2**16, so results are
    exact for every supported modulus regardless of size.
    """
    return (m * v[None, :] % q).sum(axis=1) % q


def matvec_split_kernel(m, v, q):
    """Matrix-vector product via 15-bit operand splitting.

    v = v_lo + 2**15 * v_hi keeps both partial dot products strictly below
    2**63 for n <= 2**16 and q < 2**31, trading the per-product reduction
    of matvec_reduced_kernel for two plain integer matmuls.
    """
    v_lo = v & _SPLIT_MASK
    v_hi = v >> _SPLIT_BITS
    lo = m @ v_lo
    hi = m @ v_hi
    return (lo % q + (hi % q) * ((1 << _SPLIT_BITS) % q)) % q
