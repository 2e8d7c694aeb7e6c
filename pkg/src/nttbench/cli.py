"""Command-line frontend.

Subcommands: params check, roots, mul, verify, bench. Machine-readable
output goes to stdout, diagnostics to stderr. Exit codes: 0 success,
1 domain/validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from .bench import OracleCheckError, emit_report, run_suite, suite_named
from .engine_matrix import ALL_ENGINE_KINDS, EngineKind, make_engine
from .modarith import ParameterError, build_params, validate_params
from .poly import (
    nwc_schoolbook,
    polynomial_to_json,
    random_polynomial,
    read_polynomial_file,
)

_ENGINE_NAMES = [k.value for k in ALL_ENGINE_KINDS]

# matrix_naive precomputation is quadratic in exponentiations; the
# cross-engine verify command includes it only up to this degree.
_VERIFY_NAIVE_MAX_N = 512
_VERIFY_SEED = 31337


def _engines_arg(text: str):
    if text == "all":
        return list(ALL_ENGINE_KINDS)
    try:
        return [EngineKind(part.strip()) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown engine in {text!r}; choose from {', '.join(_ENGINE_NAMES)} or 'all'"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nttbench",
        description="Negacyclic NTT engines over Z_q[x]/(x^n + 1) and their benchmarks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_params = sub.add_parser("params", help="parameter validation")
    params_sub = p_params.add_subparsers(dest="params_command", required=True)
    p_check = params_sub.add_parser("check", help="validate a (q, n) pair")
    p_check.add_argument("--q", type=int, required=True)
    p_check.add_argument("--n", type=int, required=True)

    p_roots = sub.add_parser("roots", help="print psi, psi^-1 and n^-1 for (q, n)")
    p_roots.add_argument("--q", type=int, required=True)
    p_roots.add_argument("--n", type=int, required=True)

    p_mul = sub.add_parser("mul", help="multiply two polynomial files")
    p_mul.add_argument("--q", type=int, required=True)
    p_mul.add_argument("--n", type=int, required=True)
    p_mul.add_argument("--engine", choices=_ENGINE_NAMES, default=EngineKind.MATRIX_LUT.value)
    p_mul.add_argument("--a", required=True, metavar="FILE")
    p_mul.add_argument("--b", required=True, metavar="FILE")
    p_mul.add_argument("--verify", action="store_true", help="cross-check against the schoolbook oracle")
    p_mul.add_argument("--out", metavar="FILE")

    p_verify = sub.add_parser("verify", help="cross-engine equivalence suite")
    p_verify.add_argument("--suite", choices=["pqc", "he"], required=True)
    p_verify.add_argument("--trials", type=int, default=5)

    p_bench = sub.add_parser("bench", help="run the benchmark harness")
    p_bench.add_argument("--suite", choices=["pqc", "he", "all"], required=True)
    p_bench.add_argument("--engines", type=_engines_arg, default=list(ALL_ENGINE_KINDS))
    p_bench.add_argument("--iters", type=int, default=11)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p_bench.add_argument("--out", metavar="FILE")

    return parser


def _cmd_params(args) -> int:
    validate_params(args.q, args.n)
    print("ok")
    return 0


def _cmd_roots(args) -> int:
    params = build_params(args.q, args.n)
    print(f"psi={params.psi}")
    print(f"psi_inv={params.psi_inv}")
    print(f"n_inv={params.n_inv}")
    return 0


def _cmd_mul(args) -> int:
    params = build_params(args.q, args.n)
    a = read_polynomial_file(args.a, params)
    b = read_polynomial_file(args.b, params)
    engine = make_engine(args.engine, params)
    c = engine.polymul(a, b)
    if args.verify and c != nwc_schoolbook(a, b):
        print(
            f"error: engine {args.engine} disagrees with the schoolbook oracle "
            f"at q={args.q} n={args.n}",
            file=sys.stderr,
        )
        return 1
    doc = polynomial_to_json(c)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(doc + "\n")
    else:
        print(doc)
    return 0


def _cmd_verify(args) -> int:
    suite = suite_named(args.suite)
    if args.trials < 1:
        raise ValueError(f"--trials must be >= 1, got {args.trials}")
    failed = False
    for q, n in suite.entries:
        params = build_params(q, n)
        kinds = [EngineKind.FAST, EngineKind.MATRIX_LUT, EngineKind.MATRIX_WIDE]
        if n <= _VERIFY_NAIVE_MAX_N:
            kinds.insert(1, EngineKind.MATRIX_NAIVE)
        engines = [make_engine(k, params) for k in kinds]
        point_ok = True
        for t in range(args.trials):
            a = random_polynomial(params, _VERIFY_SEED + 2 * t)
            b = random_polynomial(params, _VERIFY_SEED + 2 * t + 1)
            expected = nwc_schoolbook(a, b)
            for eng in engines:
                if eng.polymul(a, b) != expected:
                    point_ok = False
                    print(
                        f"mismatch: engine={eng.kind.value} q={q} n={n} trial={t}",
                        file=sys.stderr,
                    )
        status = "ok" if point_ok else "FAIL"
        names = ",".join(k.value for k in kinds)
        print(f"{status} q={q} n={n} trials={args.trials} engines={names}")
        failed = failed or not point_ok
    return 1 if failed else 0


def _cmd_bench(args) -> int:
    suite = suite_named(args.suite)
    report = run_suite(suite, args.engines, iters=args.iters, seed=args.seed)
    text = emit_report(report, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


_DISPATCH = {
    "params": _cmd_params,
    "roots": _cmd_roots,
    "mul": _cmd_mul,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _DISPATCH[args.command](args)
    except (ParameterError, ValueError, OSError, OracleCheckError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry_point():
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
