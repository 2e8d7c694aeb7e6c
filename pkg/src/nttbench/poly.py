"""Polynomial values over Z_q[x]/(x^n + 1) and the schoolbook oracle.

Coefficient vectors are kept in canonical reduced form [0, q) at all times;
out-of-range input is rejected rather than auto-reduced so that the range
invariant is checkable at every boundary.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .kernels import nwc_schoolbook_kernel
from .modarith import NttParams, build_params


def _check_values(values, params: NttParams) -> np.ndarray:
    arr = np.asarray(values, dtype=np.int64)
    if arr.ndim != 1 or arr.shape[0] != params.n:
        raise ValueError(f"expected {params.n} coefficients, got shape {arr.shape}")
    if arr.size and (int(arr.min()) < 0 or int(arr.max()) >= params.q):
        raise ValueError(f"coefficients must lie in [0, {params.q})")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Element of Z_q[x]/(x^n + 1): coefficient of x^i at index i."""

    coeffs: np.ndarray
    params: NttParams

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _check_values(self.coeffs, self.params))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.params == other.params and np.array_equal(self.coeffs, other.coeffs)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class NttVector:
    """Transform-domain counterpart of Polynomial (same length/range rules)."""

    values: np.ndarray
    params: NttParams

    def __post_init__(self):
        object.__setattr__(self, "values", _check_values(self.values, self.params))

    def __eq__(self, other):
        if not isinstance(other, NttVector):
            return NotImplemented
        return self.params == other.params and np.array_equal(self.values, other.values)

    __hash__ = None


def require_same_params(x, y):
    if x.params != y.params:
        raise ValueError(
            f"parameter mismatch: (q={x.params.q}, n={x.params.n}) vs "
            f"(q={y.params.q}, n={y.params.n})"
        )


def nwc_schoolbook(a: Polynomial, b: Polynomial) -> Polynomial:
    """Exact negacyclic product by direct O(n^2) convolution.

    c_k = (sum_{i<=k} a_i * b_{k-i}  -  sum_{i>k} a_i * b_{k+n-i}) mod q,
    i.e. plain coefficient multiplication with x^n = -1 folding. This is the
    reference against which every transform engine is checked.
    """
    require_same_params(a, b)
    c = nwc_schoolbook_kernel(a.coeffs, b.coeffs, a.params.q)
    return Polynomial(c, a.params)


def random_polynomial(params: NttParams, seed: int) -> Polynomial:
    """Uniform random element, reproducible from seed.

    Uses numpy's default PCG64 generator seeded with `seed`; coefficients
    are drawn as rng.integers(0, q, size=n), so the same (params, seed)
    always yields the same polynomial on any platform.
    """
    rng = np.random.default_rng(seed)
    coeffs = rng.integers(0, params.q, size=params.n, dtype=np.int64)
    return Polynomial(coeffs, params)


def write_polynomial_file(poly: Polynomial, path):
    """Serialize to the polynomial file format: JSON with q, n, coeffs."""
    with open(path, "w") as fh:
        fh.write(polynomial_to_json(poly))


def polynomial_to_json(poly: Polynomial) -> str:
    doc = {"q": poly.params.q, "n": poly.params.n, "coeffs": [int(c) for c in poly.coeffs]}
    return json.dumps(doc)


def read_polynomial_file(path, params: NttParams | None = None) -> Polynomial:
    """Load a polynomial file; coefficients must already be in [0, q).

    When `params` is given the file's q and n must match it; otherwise the
    ring context is built from the file's own q and n.
    """
    with open(path) as fh:
        doc = json.load(fh)
    try:
        q, n, coeffs = doc["q"], doc["n"], doc["coeffs"]
    except (TypeError, KeyError) as exc:
        raise ValueError(f"polynomial file {path} is missing field {exc}") from None
    if params is None:
        params = build_params(q, n)
    elif (params.q, params.n) != (q, n):
        raise ValueError(
            f"polynomial file {path} has (q={q}, n={n}), expected "
            f"(q={params.q}, n={params.n})"
        )
    if len(coeffs) != n:
        raise ValueError(f"polynomial file {path} has {len(coeffs)} coeffs, expected n={n}")
    return Polynomial(np.asarray(coeffs, dtype=np.int64), params)
