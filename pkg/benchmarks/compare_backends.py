#!/usr/bin/env python3
"""Time the jitted kernels against the pure-numpy fallback.

Imports both backend modules directly (ignoring NTTBENCH_BACKEND) and
reports median wall times per kernel at a few transform sizes.

    python benchmarks/compare_backends.py [--iters N] [--sizes 256,1024,2048]
"""

import argparse
import statistics
import time

import numpy as np

from nttbench.engine_fast import build_fast_tables
from nttbench.kernels import numpy_backend
from nttbench.modarith import build_params

try:
    from nttbench.kernels import numba_backend
except ImportError:
    numba_backend = None

Q = 1073479681  # the largest supported experiment modulus


def median_time(fn, iters):
    fn()  # warm-up; also triggers JIT compilation for the jitted backend
    times = []
    for _ in range(iters):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def bench_point(n, iters):
    params = build_params(Q, n)
    tables = build_fast_tables(params)
    rng = np.random.default_rng(n)
    a = rng.integers(0, Q, size=n, dtype=np.int64)
    b = rng.integers(0, Q, size=n, dtype=np.int64)
    m = rng.integers(0, Q, size=(n, n), dtype=np.int64)

    cases = [
        ("nwc_schoolbook", lambda be: be.nwc_schoolbook_kernel(a, b, Q)),
        ("ntt_forward", lambda be: be.ntt_forward_kernel(a, tables.fwd_twiddles, Q)),
        (
            "ntt_inverse",
            lambda be: be.ntt_inverse_kernel(a, tables.inv_twiddles, params.n_inv, Q),
        ),
        ("pointwise_mul", lambda be: be.pointwise_mul_kernel(a, b, Q)),
        ("matvec_reduced", lambda be: be.matvec_reduced_kernel(m, a, Q)),
        ("matvec_split", lambda be: be.matvec_split_kernel(m, a, Q)),
    ]
    for name, call in cases:
        t_np = median_time(lambda: call(numpy_backend), iters)
        if numba_backend is None:
            print(f"n={n:5d}  {name:15s}  numpy {t_np * 1e3:9.3f} ms   numba unavailable")
            continue
        t_nb = median_time(lambda: call(numba_backend), iters)
        ratio = t_np / t_nb if t_nb > 0 else float("inf")
        print(
            f"n={n:5d}  {name:15s}  numpy {t_np * 1e3:9.3f} ms   "
            f"numba {t_nb * 1e3:9.3f} ms   numpy/numba {ratio:6.2f}x"
        )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--iters", type=int, default=9)
    parser.add_argument("--sizes", default="256,1024,2048")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    print(f"modulus q = {Q}, median of {args.iters} runs")
    for n in sizes:
        bench_point(n, args.iters)


if __name__ == "__main__":
    main()
