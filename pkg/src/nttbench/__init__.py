"""Negacyclic NTT engines over Z_q[x]/(x^n + 1) with a benchmark harness.

Four interchangeable engines compute the negative-wrapped-convolution
product exactly: a butterfly transform (`fast`) and three matrix-form
strategies (`matrix_naive`, `matrix_lut`, `matrix_wide`). A schoolbook
O(n^2) oracle anchors correctness, and the bench module reproduces the
speedup/score evaluation methodology over PQC- and HE-scale parameters.
"""

from .bench import (
    HE_SUITE,
    PQC_SUITE,
    BenchReport,
    OracleCheckError,
    ParamSuite,
    TimingRecord,
    emit_report,
    memory_account,
    parse_report_csv,
    parse_report_json,
    run_suite,
    score,
    speedup,
    suite_named,
    time_engine,
)
from .engine_fast import (
    FastEngine,
    FastNttTables,
    bit_reverse_permutation,
    build_fast_tables,
    fast_forward,
    fast_inverse,
    fast_polymul,
)
from .engine_matrix import (
    ALL_ENGINE_KINDS,
    EngineKind,
    ExponentTable,
    MatrixEngine,
    PowerLut,
    TransformMatrices,
    build_exponent_table,
    build_lut,
    build_matrices_lut,
    build_matrices_naive,
    make_engine,
    matrix_forward,
    matrix_inverse,
    matrix_polymul,
    matvec_mod,
)
from .kernels import ACTIVE_BACKEND
from .modarith import (
    NttParams,
    ParameterError,
    build_params,
    find_psi,
    is_prime,
    mod_inv,
    mod_mul,
    mod_pow,
    validate_params,
)
from .poly import (
    NttVector,
    Polynomial,
    nwc_schoolbook,
    random_polynomial,
    read_polynomial_file,
    write_polynomial_file,
)

__all__ = [
    "ACTIVE_BACKEND",
    "ALL_ENGINE_KINDS",
    "BenchReport",
    "EngineKind",
    "ExponentTable",
    "FastEngine",
    "FastNttTables",
    "HE_SUITE",
    "MatrixEngine",
    "NttParams",
    "NttVector",
    "OracleCheckError",
    "ParamSuite",
    "ParameterError",
    "Polynomial",
    "PowerLut",
    "PQC_SUITE",
    "TimingRecord",
    "TransformMatrices",
    "bit_reverse_permutation",
    "build_exponent_table",
    "build_fast_tables",
    "build_lut",
    "build_matrices_lut",
    "build_matrices_naive",
    "build_params",
    "emit_report",
    "fast_forward",
    "fast_inverse",
    "fast_polymul",
    "find_psi",
    "is_prime",
    "make_engine",
    "matrix_forward",
    "matrix_inverse",
    "matrix_polymul",
    "matvec_mod",
    "memory_account",
    "mod_inv",
    "mod_mul",
    "mod_pow",
    "nwc_schoolbook",
    "parse_report_csv",
    "parse_report_json",
    "random_polynomial",
    "read_polynomial_file",
    "run_suite",
    "score",
    "speedup",
    "suite_named",
    "time_engine",
    "validate_params",
    "write_polynomial_file",
]
