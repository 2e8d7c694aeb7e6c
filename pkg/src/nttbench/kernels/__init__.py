"""Hot integer kernels with a numba-jitted default and a numpy fallback.

Backend selection happens once at import time via the NTTBENCH_BACKEND
environment variable:

    NTTBENCH_BACKEND=numba   require the jitted kernels (error if missing)
    NTTBENCH_BACKEND=numpy   force the pure-numpy fallback
    unset                    numba when importable, otherwise numpy

Both backends implement identical signatures and exact integer semantics;
`ACTIVE_BACKEND` names the one in use. benchmarks/compare_backends.py
times the two side by side.
"""

from __future__ import annotations

import os

from . import numpy_backend

_CHOICES = ("numba", "numpy")


def _select():
    requested = os.environ.get("NTTBENCH_BACKEND", "").strip().lower()
    if requested and requested not in _CHOICES:
        raise ValueError(
            f"NTTBENCH_BACKEND={requested!r} not recognized; use one of {_CHOICES}"
        )
    if requested == "numpy":
        return numpy_backend, "numpy"
    try:
        from . import numba_backend
    except ImportError:
        if requested == "numba":
            raise
        return numpy_backend, "numpy"
    return numba_backend, "numba"


_active, ACTIVE_BACKEND = _select()

nwc_schoolbook_kernel = _active.nwc_schoolbook_kernel
ntt_forward_kernel = _active.ntt_forward_kernel
ntt_inverse_kernel = _active.ntt_inverse_kernel
pointwise_mul_kernel = _active.pointwise_mul_kernel
matvec_reduced_kernel = _active.matvec_reduced_kernel
matvec_split_kernel = _active.matvec_split_kernel
