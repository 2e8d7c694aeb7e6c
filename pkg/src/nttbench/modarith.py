"""Exact modular arithmetic over Z_q and ring parameter construction.

Everything in this module is integer-only. Products are formed either in
Python ints or in 64-bit lanes wide enough that no intermediate ever wraps;
the supported modulus range q < 2**31 guarantees x*y < 2**62 for reduced
operands, so a signed 64-bit intermediate is always exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_MODULUS = 1 << 31

# Witness set making Miller-Rabin deterministic for all n < 3.3e24,
# comfortably covering the supported range.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_PSI_SCAN_CHUNK = 1 << 15


class ParameterError(ValueError):
    """Invalid (q, n) ring parameters. `code` names the failing check."""

    def __init__(self, message: str, code: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class NttParams:
    """Ring context for Z_q[x]/(x^n + 1).

    psi is a primitive 2n-th root of unity mod q (psi^n = -1), psi_inv its
    modular inverse and n_inv the inverse of n. Instances are immutable and
    verify their own consistency on construction.
    """

    q: int
    n: int
    psi: int
    psi_inv: int
    n_inv: int

    def __post_init__(self):
        q, n = self.q, self.n
        if pow(self.psi, n, q) != q - 1 or pow(self.psi, 2 * n, q) != 1:
            raise ParameterError(
                f"psi={self.psi} is not a primitive {2 * n}-th root of unity mod {q}",
                code="bad_root",
            )
        if self.psi * self.psi_inv % q != 1:
            raise ParameterError("psi_inv does not invert psi", code="bad_root")
        if n * self.n_inv % q != 1:
            raise ParameterError("n_inv does not invert n", code="bad_root")


def mod_mul(x: int, y: int, q: int) -> int:
    """(x * y) mod q for reduced operands 0 <= x, y < q."""
    return x * y % q


def mod_pow(base: int, exp: int, q: int) -> int:
    """base**exp mod q by square-and-multiply, O(log exp) multiplications."""
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    result = 1
    b = base % q
    e = exp
    while e:
        if e & 1:
            result = result * b % q
        b = b * b % q
        e >>= 1
    return result


def mod_inv(x: int, q: int) -> int:
    """Multiplicative inverse of x mod prime q, via x**(q-2)."""
    if x % q == 0:
        raise ValueError(f"0 has no inverse mod {q}")
    return mod_pow(x, q - 2, q)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 2**64."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def validate_params(q: int, n: int):
    """Check that (q, n) admits a negacyclic NTT.

    Requires q prime and below 2**31, n a power of two with n >= 2, and
    2n | q - 1 (the existence condition for a primitive 2n-th root of
    unity). Raises ParameterError with a distinct code per failing check.
    """
    if not isinstance(q, int) or not isinstance(n, int):
        raise ParameterError("q and n must be integers", code="modulus_out_of_range")
    if q >= MAX_MODULUS:
        raise ParameterError(
            f"q={q} is out of the supported range (q < 2**31)",
            code="modulus_out_of_range",
        )
    if not is_prime(q):
        raise ParameterError(f"composite modulus: q={q} is not prime", code="composite_modulus")
    if n < 2 or n & (n - 1) != 0:
        raise ParameterError(
            f"n={n} is not a power of two >= 2", code="degree_not_power_of_two"
        )
    if (q - 1) % (2 * n) != 0:
        raise ParameterError(
            f"2n={2 * n} does not divide q-1={q - 1}: no 2n-th root of unity mod {q}",
            code="no_root_of_unity",
        )


def find_psi(q: int, n: int) -> int:
    """Smallest primitive 2n-th root of unity mod q.

    Scans residues upward for the first x with x^n = q - 1 (which already
    implies x^(2n) = 1). The scan runs vectorized square-and-multiply over
    64-bit chunks, so it is exact and deterministic for fixed (q, n).
    Callers must have validated (q, n); existence is then guaranteed.
    """
    target = q - 1
    start = 2
    while start < q:
        stop = min(start + _PSI_SCAN_CHUNK, q)
        base = np.arange(start, stop, dtype=np.int64)
        acc = np.ones(stop - start, dtype=np.int64)
        e = n
        while e:
            if e & 1:
                acc = acc * base % q
            base = base * base % q
            e >>= 1
        hits = np.nonzero(acc == target)[0]
        if hits.size:
            return start + int(hits[0])
        start = stop
    raise ParameterError(
        f"no primitive {2 * n}-th root of unity mod {q}", code="no_root_of_unity"
    )


def build_params(q: int, n: int) -> NttParams:
    """Validate (q, n) and assemble the full ring context."""
    validate_params(q, n)
    psi = find_psi(q, n)
    return NttParams(q=q, n=n, psi=psi, psi_inv=mod_inv(psi, q), n_inv=mod_inv(n, q))
