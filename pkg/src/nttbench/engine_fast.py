"""Quasi-linear negacyclic NTT engine: log2(n) butterfly stages.

This is the deliberately serial O(n log n) baseline. The root powers that
encode the negacyclic twist are merged into the per-stage multiplier
tables rather than applied as separate pre/post scaling passes, and the
tables are fully precomputed when the engine is built.

Stage layout: the forward pass consumes natural coefficient order and
produces the transform in bit-reversed order; the inverse pass is the
mirror image (bit-reversed in, natural out). The public forward/inverse
operations bracket the stages with one bit-reversal permutation so both
expose the natural-order transform, while polymul chains the stages
directly and never reorders.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .kernels import ntt_forward_kernel, ntt_inverse_kernel, pointwise_mul_kernel
from .modarith import NttParams, mod_pow
from .poly import NttVector, Polynomial, require_same_params


def bit_reverse_indices(n: int) -> np.ndarray:
    """Permutation table p with p[i] = i with its log2(n) bits reversed."""
    if n < 1 or n & (n - 1) != 0:
        raise ValueError(f"length {n} is not a power of two")
    bits = n.bit_length() - 1
    idx = np.arange(n, dtype=np.int64)
    rev = np.zeros(n, dtype=np.int64)
    for _ in range(bits):
        rev = (rev << 1) | (idx & 1)
        idx >>= 1
    return rev


def bit_reverse_permutation(v):
    """Reorder v so the element at index i moves to bit-reversed(i)."""
    v = np.asarray(v)
    return v[bit_reverse_indices(v.shape[0])]


@dataclass(frozen=True, eq=False)
class FastNttTables:
    """Precomputed stage multipliers and the bit-reversal permutation.

    fwd_twiddles[k] = psi^bitrev(k) and inv_twiddles[k] = psi^-bitrev(k),
    so paired entries multiply to 1 mod q.
    """

    params: NttParams
    fwd_twiddles: np.ndarray
    inv_twiddles: np.ndarray
    bitrev: np.ndarray


def build_fast_tables(params: NttParams) -> FastNttTables:
    q, n = params.q, params.n
    rev = bit_reverse_indices(n)
    fwd = np.array([mod_pow(params.psi, int(r), q) for r in rev], dtype=np.int64)
    inv = np.array([mod_pow(params.psi_inv, int(r), q) for r in rev], dtype=np.int64)
    fwd.setflags(write=False)
    inv.setflags(write=False)
    rev.setflags(write=False)
    return FastNttTables(params=params, fwd_twiddles=fwd, inv_twiddles=inv, bitrev=rev)


def fast_forward(a: Polynomial, tables: FastNttTables) -> NttVector:
    """Forward transform; output index i holds sum_j psi^(2ij+j) a_j mod q."""
    if a.params != tables.params:
        raise ValueError("polynomial params do not match tables")
    out, _ = ntt_forward_kernel(a.coeffs, tables.fwd_twiddles, tables.params.q)
    return NttVector(out[tables.bitrev], tables.params)


def fast_inverse(a_prime: NttVector, tables: FastNttTables) -> Polynomial:
    """Inverse transform; exact round-trip with fast_forward."""
    if a_prime.params != tables.params:
        raise ValueError("vector params do not match tables")
    p = tables.params
    out, _ = ntt_inverse_kernel(
        a_prime.values[tables.bitrev], tables.inv_twiddles, p.n_inv, p.q
    )
    return Polynomial(out, p)


def fast_polymul(a: Polynomial, b: Polynomial, tables: FastNttTables) -> Polynomial:
    """Negacyclic product: inverse(forward(a) * forward(b)).

    The intermediate vectors stay in bit-reversed stage order; the
    element-wise product commutes with the permutation, so no reordering
    is needed between the three phases.
    """
    require_same_params(a, b)
    if a.params != tables.params:
        raise ValueError("polynomial params do not match tables")
    p = tables.params
    a_hat, _ = ntt_forward_kernel(a.coeffs, tables.fwd_twiddles, p.q)
    b_hat, _ = ntt_forward_kernel(b.coeffs, tables.fwd_twiddles, p.q)
    c_hat = pointwise_mul_kernel(a_hat, b_hat, p.q)
    out, _ = ntt_inverse_kernel(c_hat, tables.inv_twiddles, p.n_inv, p.q)
    return Polynomial(out, p)


class FastEngine:
    """Uniform engine interface over the butterfly transform."""

    def __init__(self, params: NttParams):
        t0 = time.perf_counter()
        self.tables = build_fast_tables(params)
        self.precompute_seconds = time.perf_counter() - t0
        self.params = params
        self.table_bytes = (
            self.tables.fwd_twiddles.nbytes
            + self.tables.inv_twiddles.nbytes
            + self.tables.bitrev.nbytes
        )

    def forward(self, a: Polynomial) -> NttVector:
        return fast_forward(a, self.tables)

    def inverse(self, a_prime: NttVector) -> Polynomial:
        return fast_inverse(a_prime, self.tables)

    def polymul(self, a: Polynomial, b: Polynomial) -> Polynomial:
        return fast_polymul(a, b, self.tables)
