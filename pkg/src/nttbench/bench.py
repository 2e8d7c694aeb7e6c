"""Benchmark harness: parameter suites, timing, memory accounting, reports.

Timing separates the offline phase (engine construction) from the online
transforms. Per point and engine the harness runs one discarded warm-up
repetition and then `iters` timed repetitions on seeded random inputs,
reporting medians. The speedup of an engine is the reference engine's
NTT+INTT time over its own (the `fast` butterfly engine is the reference);
the score combines relative speedup and relative memory against the
`matrix_lut` baseline:

    speedup = (t_ntt_ref + t_intt_ref) / (t_ntt + t_intt)
    score   = speedup / speedup_baseline + memory_baseline / memory

Memory is deterministic accounting of table and scratch bytes from the
closed forms in `memory_account`, not OS sampling, so runs are comparable
across machines.
"""

from __future__ import annotations

import csv
import io
import json
import statistics
import time
from dataclasses import dataclass, field

from .engine_matrix import EngineKind, make_engine
from .modarith import build_params, validate_params
from .poly import nwc_schoolbook, random_polynomial

CSV_HEADER = (
    "engine,q,n,precompute_s,ntt_time_s,intt_time_s,speedup,memory_bytes,score"
)

# Seed offsets for the pre-timing correctness check inputs, kept far away
# from the per-iteration input seeds (seed + i).
_CHECK_SEED_A = 104729
_CHECK_SEED_B = 104730
_WARMUP_SEED = 95989


@dataclass(frozen=True)
class ParamSuite:
    """Named list of (q, n) experiment points."""

    name: str
    entries: tuple


PQC_SUITE = ParamSuite(
    "pqc",
    (
        (7681, 64),
        (7681, 128),
        (7681, 256),
        (12289, 512),
        (12289, 1024),
        (12289, 2048),
        (8380417, 256),
        (8380417, 512),
        (8380417, 1024),
    ),
)

HE_SUITE = ParamSuite(
    "he",
    (
        (8380417, 2048),
        (1073479681, 1024),
        (1073479681, 2048),
    ),
)


def suite_named(name: str) -> ParamSuite:
    if name == "pqc":
        return PQC_SUITE
    if name == "he":
        return HE_SUITE
    if name == "all":
        return ParamSuite("all", PQC_SUITE.entries + HE_SUITE.entries)
    raise ValueError(f"unknown suite {name!r} (expected pqc, he or all)")


@dataclass(frozen=True)
class TimingRecord:
    """Per-(engine, q, n) timing result.

    samples[i] is the (ntt_seconds, intt_seconds) pair of repetition i;
    t_ntt and t_intt are the medians of the respective components.
    Records parsed back from a CSV document carry no samples.
    """

    engine: EngineKind
    q: int
    n: int
    t_ntt: float
    t_intt: float
    t_precompute: float
    iters: int
    samples: tuple = ()


@dataclass
class BenchReport:
    """Benchmark results plus the derived per-row metrics.

    The metric maps are keyed by (engine value, q, n). baseline_fast is the
    speedup reference engine, baseline_gpu the score baseline.
    """

    records: list = field(default_factory=list)
    memory: dict = field(default_factory=dict)
    speedups: dict = field(default_factory=dict)
    scores: dict = field(default_factory=dict)
    baseline_fast: EngineKind = EngineKind.FAST
    baseline_gpu: EngineKind = EngineKind.MATRIX_LUT
    suite: str = ""
    seed: int = 0
    iters: int = 0


class OracleCheckError(RuntimeError):
    """An engine disagreed with the schoolbook oracle before timing."""

    def __init__(self, engine: EngineKind, q: int, n: int, seed: int):
        super().__init__(
            f"correctness check failed for engine={engine.value} q={q} n={n} seed={seed}"
        )
        self.engine = engine
        self.q = q
        self.n = n
        self.seed = seed


def speedup(t_ntt_ref: float, t_intt_ref: float, t_ntt_l: float, t_intt_l: float) -> float:
    """Reference transform time over candidate transform time."""
    for t in (t_ntt_ref, t_intt_ref, t_ntt_l, t_intt_l):
        if not t > 0:
            raise ValueError(f"timings must be positive, got {t}")
    return (t_ntt_ref + t_intt_ref) / (t_ntt_l + t_intt_l)


def score(s_l: float, s_baseline: float, m_baseline: float, m_l: float) -> float:
    """Combined speed/memory score: s_l/s_baseline + m_baseline/m_l."""
    for v in (s_l, s_baseline, m_baseline, m_l):
        if not v > 0:
            raise ValueError(f"score inputs must be positive, got {v}")
    return s_l / s_baseline + m_baseline / m_l


_WORD = 8  # every retained table and buffer is int64


def memory_account(kind, q: int, n: int) -> int:
    """Accounted bytes: retained tables plus peak per-transform scratch.

    Closed forms, in 8-byte words:
      fast          3n tables (two twiddle tables + permutation) + 3n scratch
                    (three transform-domain temporaries during polymul)
      matrix_naive  2n^2 matrices + 2n scratch (transform temp + output)
      matrix_lut    2n^2 matrices + 4n retained LUTs + 2n scratch
      matrix_wide   2n^2 matrices + 2n scratch (LUTs dropped after build)

    The table terms equal the `table_bytes` of the corresponding engine.
    """
    validate_params(q, n)
    kind = EngineKind(kind)
    if kind is EngineKind.FAST:
        words = 3 * n + 3 * n
    elif kind is EngineKind.MATRIX_LUT:
        words = 2 * n * n + 4 * n + 2 * n
    else:
        words = 2 * n * n + 2 * n
    return words * _WORD


def _time_prebuilt(engine, kind, q, n, iters, seed, clock, t_precompute) -> TimingRecord:
    params = engine.params
    warm = random_polynomial(params, _WARMUP_SEED)
    engine.inverse(engine.forward(warm))
    samples = []
    for i in range(iters):
        a = random_polynomial(params, seed + i)
        t0 = clock()
        a_hat = engine.forward(a)
        t1 = clock()
        engine.inverse(a_hat)
        t2 = clock()
        samples.append((t1 - t0, t2 - t1))
    return TimingRecord(
        engine=kind,
        q=q,
        n=n,
        t_ntt=statistics.median(s[0] for s in samples),
        t_intt=statistics.median(s[1] for s in samples),
        t_precompute=t_precompute,
        iters=iters,
        samples=tuple(samples),
    )


def time_engine(kind, q: int, n: int, iters: int, seed: int, clock=time.perf_counter) -> TimingRecord:
    """Construct the engine once, then time forward and inverse separately.

    Input for repetition i is random_polynomial(params, seed + i); one
    warm-up repetition runs first and is discarded. `clock` is injectable
    so records are fully deterministic under a mock clock.
    """
    if iters < 3:
        raise ValueError(f"iters must be >= 3, got {iters}")
    kind = EngineKind(kind)
    params = build_params(q, n)
    t0 = clock()
    engine = make_engine(kind, params)
    t_precompute = clock() - t0
    return _time_prebuilt(engine, kind, q, n, iters, seed, clock, t_precompute)


def run_suite(suite: ParamSuite, kinds, iters: int = 11, seed: int = 0, clock=time.perf_counter) -> BenchReport:
    """Benchmark every (engine, q, n) combination of the suite.

    The reference (fast) and baseline (matrix_lut) engines are always
    timed, whether or not they appear in `kinds`, since every row's
    speedup and score are computed against them. Before timing, each
    engine's polymul is checked against the schoolbook oracle on one
    seeded random pair; any mismatch aborts the run.
    """
    if not suite.entries:
        raise ValueError("empty parameter suite")
    kinds = [EngineKind(k) for k in kinds]
    if not kinds:
        raise ValueError("no engine kinds requested")
    timed = []
    for required in (EngineKind.FAST, EngineKind.MATRIX_LUT):
        if required not in kinds:
            timed.append(required)
    for k in kinds:
        if k not in timed:
            timed.append(k)
    if iters < 3:
        raise ValueError(f"iters must be >= 3, got {iters}")

    records = []
    for q, n in suite.entries:
        params = build_params(q, n)
        check_a = random_polynomial(params, seed + _CHECK_SEED_A)
        check_b = random_polynomial(params, seed + _CHECK_SEED_B)
        expected = nwc_schoolbook(check_a, check_b)
        for kind in timed:
            t0 = clock()
            engine = make_engine(kind, params)
            t_precompute = clock() - t0
            if engine.polymul(check_a, check_b) != expected:
                raise OracleCheckError(kind, q, n, seed)
            records.append(
                _time_prebuilt(engine, kind, q, n, iters, seed, clock, t_precompute)
            )

    by_point = {}
    for rec in records:
        by_point.setdefault((rec.q, rec.n), {})[rec.engine] = rec

    memory, speedups, scores = {}, {}, {}
    for rec in records:
        key = (rec.engine.value, rec.q, rec.n)
        ref = by_point[(rec.q, rec.n)][EngineKind.FAST]
        memory[key] = memory_account(rec.engine, rec.q, rec.n)
        speedups[key] = speedup(ref.t_ntt, ref.t_intt, rec.t_ntt, rec.t_intt)
    for rec in records:
        key = (rec.engine.value, rec.q, rec.n)
        base_key = (EngineKind.MATRIX_LUT.value, rec.q, rec.n)
        scores[key] = score(
            speedups[key], speedups[base_key], memory[base_key], memory[key]
        )

    return BenchReport(
        records=records,
        memory=memory,
        speedups=speedups,
        scores=scores,
        suite=suite.name,
        seed=seed,
        iters=iters,
    )


def _report_rows(report: BenchReport):
    rows = []
    for rec in report.records:
        key = (rec.engine.value, rec.q, rec.n)
        rows.append(
            {
                "engine": rec.engine.value,
                "q": rec.q,
                "n": rec.n,
                "precompute_s": rec.t_precompute,
                "ntt_time_s": rec.t_ntt,
                "intt_time_s": rec.t_intt,
                "speedup": report.speedups[key],
                "memory_bytes": report.memory[key],
                "score": report.scores[key],
            }
        )
    return rows


def emit_report(report: BenchReport, format: str) -> str:
    """Render a report as aligned text, CSV, or JSON.

    CSV carries the summary columns only; JSON additionally carries the
    run metadata and the raw timing samples, so parsing it reconstructs
    the full report. Both serializations are deterministic.
    """
    if format == "json":
        rows = _report_rows(report)
        for rec, row in zip(report.records, rows):
            row["samples"] = [[s[0], s[1]] for s in rec.samples]
        doc = {
            "meta": {
                "suite": report.suite,
                "seed": report.seed,
                "iters": report.iters,
                "baseline_fast": report.baseline_fast.value,
                "baseline_gpu": report.baseline_gpu.value,
            },
            "rows": rows,
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER.split(","))
        for row in _report_rows(report):
            writer.writerow([str(row[col]) for col in CSV_HEADER.split(",")])
        return buf.getvalue()
    if format == "table":
        cols = CSV_HEADER.split(",")
        cells = [cols]
        for row in _report_rows(report):
            cells.append(
                [
                    row["engine"],
                    str(row["q"]),
                    str(row["n"]),
                    f"{row['precompute_s']:.6g}",
                    f"{row['ntt_time_s']:.6g}",
                    f"{row['intt_time_s']:.6g}",
                    f"{row['speedup']:.2f}",
                    str(row["memory_bytes"]),
                    f"{row['score']:.2f}",
                ]
            )
        widths = [max(len(r[c]) for r in cells) for c in range(len(cols))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in cells]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unsupported report format {format!r}")


def parse_report_json(text: str) -> BenchReport:
    doc = json.loads(text)
    meta = doc["meta"]
    report = BenchReport(
        baseline_fast=EngineKind(meta["baseline_fast"]),
        baseline_gpu=EngineKind(meta["baseline_gpu"]),
        suite=meta["suite"],
        seed=meta["seed"],
        iters=meta["iters"],
    )
    for row in doc["rows"]:
        samples = tuple((s[0], s[1]) for s in row.get("samples", ()))
        _append_row(report, row, samples, iters=len(samples) or meta["iters"])
    return report


def parse_report_csv(text: str) -> BenchReport:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != CSV_HEADER.split(","):
        raise ValueError(f"unexpected CSV header {header}")
    report = BenchReport()
    for raw in reader:
        row = dict(zip(header, raw))
        row = {
            "engine": row["engine"],
            "q": int(row["q"]),
            "n": int(row["n"]),
            "precompute_s": float(row["precompute_s"]),
            "ntt_time_s": float(row["ntt_time_s"]),
            "intt_time_s": float(row["intt_time_s"]),
            "speedup": float(row["speedup"]),
            "memory_bytes": int(row["memory_bytes"]),
            "score": float(row["score"]),
        }
        _append_row(report, row, samples=(), iters=0)
    return report


def _append_row(report: BenchReport, row: dict, samples: tuple, iters: int):
    kind = EngineKind(row["engine"])
    key = (kind.value, row["q"], row["n"])
    report.records.append(
        TimingRecord(
            engine=kind,
            q=row["q"],
            n=row["n"],
            t_ntt=row["ntt_time_s"],
            t_intt=row["intt_time_s"],
            t_precompute=row["precompute_s"],
            iters=iters,
            samples=samples,
        )
    )
    report.memory[key] = row["memory_bytes"]
    report.speedups[key] = row["speedup"]
    report.scores[key] = row["score"]
