"""Matrix-form negacyclic NTT engines and the uniform engine registry.

Three strategies share the same online phase (a modular matrix-vector
product) and differ in how the n x n transform matrices are produced and
which accumulation discipline the product uses:

  matrix_naive  per-entry modular exponentiation of the unreduced exponent
                pattern; Theta(n^2 log n) multiplications, serial by design.
                This is the quadratic-precompute reference strategy; its
                online product uses the plain reduce-first kernel.
  matrix_lut    the exponent pattern is reduced mod 2n (lossless, since the
                root has multiplicative order exactly 2n) and both matrices
                are gathered out of length-2n power lookup tables; the
                online product uses the split-accumulation kernel.
  matrix_wide   built like matrix_lut but the online product reduces every
                term before accumulating, keeping row sums below 2**47 for
                any supported modulus; the LUTs are dropped after
                construction.

The forward matrix has entry psi^(2ij+j) at (i, j) and the inverse matrix
psi^-(2ij+i); n^-1 * w_intt * w_ntt is the identity mod q.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass

import numpy as np

from .engine_fast import FastEngine
from .kernels import (
    matvec_reduced_kernel,
    matvec_split_kernel,
    pointwise_mul_kernel,
)
from .modarith import NttParams
from .poly import NttVector, Polynomial, require_same_params


class EngineKind(str, enum.Enum):
    FAST = "fast"
    MATRIX_NAIVE = "matrix_naive"
    MATRIX_LUT = "matrix_lut"
    MATRIX_WIDE = "matrix_wide"

    def __str__(self):
        return self.value


ALL_ENGINE_KINDS = (
    EngineKind.FAST,
    EngineKind.MATRIX_NAIVE,
    EngineKind.MATRIX_LUT,
    EngineKind.MATRIX_WIDE,
)


@dataclass(frozen=True, eq=False)
class ExponentTable:
    """entries[i, j] = (2ij + j) mod 2n, the shared forward exponent pattern."""

    n: int
    entries: np.ndarray


@dataclass(frozen=True, eq=False)
class PowerLut:
    """table[k] = base^k mod q for k in [0, 2n)."""

    base: int
    table: np.ndarray


@dataclass(frozen=True, eq=False)
class TransformMatrices:
    params: NttParams
    w_ntt: np.ndarray
    w_intt: np.ndarray

    def __post_init__(self):
        n = self.params.n
        if self.w_ntt.shape != (n, n) or self.w_intt.shape != (n, n):
            raise ValueError(f"transform matrices must be {n}x{n}")


def build_exponent_table(n: int) -> ExponentTable:
    if n < 1 or n & (n - 1) != 0:
        raise ValueError(f"n={n} is not a power of two")
    # 2n is a power of two, so the reduction is a mask. int32 keeps the
    # gather index small; the unreduced (2i+1)j only fits it for n <= 2**15.
    dtype = np.int32 if n <= 1 << 15 else np.int64
    i = np.arange(n, dtype=dtype)[:, None]
    j = np.arange(n, dtype=dtype)[None, :]
    entries = ((2 * i + 1) * j) & (2 * n - 1)
    entries.setflags(write=False)
    return ExponentTable(n=n, entries=entries)


def build_lut(base: int, params: NttParams) -> PowerLut:
    """Cumulative power table of length 2n: O(n) multiplications."""
    if not 0 < base < params.q:
        raise ValueError(f"base must be in (0, {params.q})")
    q = params.q
    table = np.empty(2 * params.n, dtype=np.int64)
    acc = 1
    for k in range(2 * params.n):
        table[k] = acc
        acc = acc * base % q
    table.setflags(write=False)
    return PowerLut(base=base, table=table)


def build_matrices_naive(params: NttParams) -> TransformMatrices:
    """Entry-by-entry construction via modular exponentiation.

    Each entry is one scalar exponentiation of the unreduced exponent
    (up to (n-1)(2n-1)), serially: Theta(n^2 log n) multiplications.
    This is the precompute baseline the table-driven builder is measured
    against.
    """
    q, n, psi, psi_inv = params.q, params.n, params.psi, params.psi_inv
    w_ntt = np.array(
        [[pow(psi, 2 * i * j + j, q) for j in range(n)] for i in range(n)],
        dtype=np.int64,
    )
    w_intt = np.array(
        [[pow(psi_inv, 2 * i * j + i, q) for j in range(n)] for i in range(n)],
        dtype=np.int64,
    )
    w_ntt.setflags(write=False)
    w_intt.setflags(write=False)
    return TransformMatrices(params=params, w_ntt=w_ntt, w_intt=w_intt)


def matrices_from_tables(
    params: NttParams,
    exponents: ExponentTable,
    lut_psi: PowerLut,
    lut_psi_inv: PowerLut,
) -> TransformMatrices:
    """Gather both matrices from one exponent table and two power LUTs.

    The inverse matrix needs the transposed exponent pattern (2ij + i), so
    it is produced by indexing the psi^-1 LUT with the shared table and
    transposing the result.
    """
    w_ntt = np.ascontiguousarray(lut_psi.table[exponents.entries])
    w_intt = np.ascontiguousarray(lut_psi_inv.table[exponents.entries].T)
    w_ntt.setflags(write=False)
    w_intt.setflags(write=False)
    return TransformMatrices(params=params, w_ntt=w_ntt, w_intt=w_intt)


def build_matrices_lut(params: NttParams) -> TransformMatrices:
    """Table-driven construction; bit-identical to build_matrices_naive.

    Theta(n^2) gathers plus Theta(n) multiplications. Correctness of the
    mod-2n exponent reduction follows from the root's order being 2n.
    """
    exponents = build_exponent_table(params.n)
    lut_psi = build_lut(params.psi, params)
    lut_psi_inv = build_lut(params.psi_inv, params)
    return matrices_from_tables(params, exponents, lut_psi, lut_psi_inv)


def matvec_mod(m: np.ndarray, v: np.ndarray, q: int) -> np.ndarray:
    """Exact modular matrix-vector product, safe for any q < 2**31, n <= 2**16.

    Each product is reduced before accumulation so row sums stay below
    n * (q - 1) < 2**47. Rows are independent and the jitted backend
    distributes them across threads; the result does not depend on the
    schedule because each row is accumulated sequentially.
    """
    m = np.asarray(m, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    if m.ndim != 2 or v.ndim != 1 or m.shape[1] != v.shape[0]:
        raise ValueError(f"dimension mismatch: matrix {m.shape} @ vector {v.shape}")
    return matvec_reduced_kernel(m, v, q)


def matrix_forward(a: Polynomial, m: TransformMatrices) -> NttVector:
    if a.params != m.params:
        raise ValueError("polynomial params do not match matrices")
    return NttVector(matvec_mod(m.w_ntt, a.coeffs, m.params.q), m.params)


def matrix_inverse(a_prime: NttVector, m: TransformMatrices) -> Polynomial:
    if a_prime.params != m.params:
        raise ValueError("vector params do not match matrices")
    p = m.params
    out = matvec_mod(m.w_intt, a_prime.values, p.q)
    return Polynomial(out * p.n_inv % p.q, p)


def matrix_polymul(a: Polynomial, b: Polynomial, m: TransformMatrices) -> Polynomial:
    require_same_params(a, b)
    a_hat = matrix_forward(a, m)
    b_hat = matrix_forward(b, m)
    c_hat = NttVector(pointwise_mul_kernel(a_hat.values, b_hat.values, m.params.q), m.params)
    return matrix_inverse(c_hat, m)


class MatrixEngine:
    """Uniform engine interface over a TransformMatrices pair."""

    def __init__(self, kind: EngineKind, params: NttParams):
        kind = EngineKind(kind)
        if kind is EngineKind.FAST:
            raise ValueError("use FastEngine for the butterfly strategy")
        t0 = time.perf_counter()
        if kind is EngineKind.MATRIX_NAIVE:
            self.matrices = build_matrices_naive(params)
            self.luts = None
        else:
            exponents = build_exponent_table(params.n)
            lut_psi = build_lut(params.psi, params)
            lut_psi_inv = build_lut(params.psi_inv, params)
            self.matrices = matrices_from_tables(params, exponents, lut_psi, lut_psi_inv)
            self.luts = (lut_psi, lut_psi_inv) if kind is EngineKind.MATRIX_LUT else None
        self.precompute_seconds = time.perf_counter() - t0
        self.kind = kind
        self.params = params
        self._matvec = (
            matvec_split_kernel if kind is EngineKind.MATRIX_LUT else matvec_reduced_kernel
        )
        self.table_bytes = self.matrices.w_ntt.nbytes + self.matrices.w_intt.nbytes
        if self.luts is not None:
            self.table_bytes += sum(lut.table.nbytes for lut in self.luts)

    def forward(self, a: Polynomial) -> NttVector:
        if a.params != self.params:
            raise ValueError("polynomial params do not match engine")
        return NttVector(self._matvec(self.matrices.w_ntt, a.coeffs, self.params.q), self.params)

    def inverse(self, a_prime: NttVector) -> Polynomial:
        if a_prime.params != self.params:
            raise ValueError("vector params do not match engine")
        p = self.params
        out = self._matvec(self.matrices.w_intt, a_prime.values, p.q)
        return Polynomial(out * p.n_inv % p.q, p)

    def polymul(self, a: Polynomial, b: Polynomial) -> Polynomial:
        require_same_params(a, b)
        a_hat = self.forward(a)
        b_hat = self.forward(b)
        c_hat = NttVector(
            pointwise_mul_kernel(a_hat.values, b_hat.values, self.params.q), self.params
        )
        return self.inverse(c_hat)


def make_engine(kind, params: NttParams):
    """Build an engine handle with all precomputation done up front.

    The handle exposes forward/inverse/polymul plus `precompute_seconds`
    (offline wall time) and `table_bytes` (bytes of retained tables) for
    the benchmark harness.
    """
    kind = EngineKind(kind)
    if kind is EngineKind.FAST:
        engine = FastEngine(params)
        engine.kind = kind
        return engine
    return MatrixEngine(kind, params)
