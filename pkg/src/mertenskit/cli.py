"""Command-line front end with deterministic CSV/JSON reports.

Commands:

    sieve      mu and Mertens values over a window [lo, hi]
    mertens    one Mertens value via the sublinear evaluator
    verify     identity residual sweeps (columns pinned below)
    gamma      gamma-series convergence table
    induction  sup-bound step comparison sweep
    bench      timing probes for the heavy evaluators

Reports are byte-stable: row order is fixed by the input grid, floats
are printed with %.17g (round-trip), and --threads only distributes
work over an order-preserving map.  --no-timestamp drops the one
run-dependent line.  Exit status: 0 all checks passed, 1 at least one
check failed, 2 usage or capacity error.
"""

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from fractions import Fraction

import numpy as np

from .arith import mobius_segment, mobius_sieve
from .config import (
    DEFAULT_TOLERANCE,
    TRIPLE_LOOP_FLOAT_BOUND,
    CapacityError,
)
from .gamma import gamma_convergence_study
from .identities import Identity, IdentityCase, verify_case
from .induction import induction_sweep, mertens_square_table
from .sequences import SequenceCache, mertens_sublinear

__all__ = ["RunConfig", "main", "run"]

_VERIFY_COLUMNS = ("identity", "x", "j", "s", "mode", "lhs", "rhs",
                   "residual", "pass")
_GAMMA_COLUMNS = ("x", "estimate", "reference", "abs_error", "scaled_error")
_INDUCTION_COLUMNS = ("x", "n", "sup_M", "argmax_y", "sup_M_sq",
                      "argmax_y_sq", "lhs", "rhs", "ratio", "minimal_C",
                      "step_holds")
_SIEVE_COLUMNS = ("k", "mu", "mertens")
_MERTENS_COLUMNS = ("x", "mertens")
_BENCH_COLUMNS = ("operation", "size", "seconds", "result")

_ID_ORDER = [Identity.EQ1, Identity.EQ2, Identity.EQ3, Identity.EQ5,
             Identity.EQ6, Identity.EQ7, Identity.EQ11, Identity.EQ12,
             Identity.EQ13, Identity.EQ15, Identity.EQ16, Identity.EQ17,
             Identity.EQ18]


@dataclass
class RunConfig:
    """One resolved invocation; `run` consumes this and nothing else."""

    command: str
    output: str = "-"
    format: str = "csv"
    threads: int = 1
    timestamp: bool = True
    tolerance: float = DEFAULT_TOLERANCE
    # sieve / mertens
    lo: int = 1
    hi: int = 100
    x: int = 10 ** 6
    # verify
    identities: tuple[str, ...] = ()
    x_min: int = 2
    x_max: int = 200
    step: int = 1
    s: float = 1.0
    mode: str = "auto"
    # gamma
    points: tuple[int, ...] = (50, 100, 200, 400, 800)
    # induction
    n: int = 1
    grid: str = "default"
    mu_file: str | None = None
    # bench
    targets: tuple[str, ...] = ("mertens",)


def _fmt_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool) or isinstance(v, np.bool_):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (float, np.floating)):
        return "%.17g" % float(v)
    return str(v)


def _json_cell(v):
    if isinstance(v, (list, tuple)):
        return [_json_cell(u) for u in v]
    if v is None or isinstance(v, bool):
        return v
    if isinstance(v, np.bool_):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (float, np.floating)):
        return float(v)
    return str(v)


def _emit(config: RunConfig, columns, rows, summary: dict) -> None:
    """Write rows (list of dicts) as CSV or JSON; '-' means stdout."""
    if config.format == "json":
        doc = {"command": config.command,
               "rows": [{c: _json_cell(r[c]) for c in columns} for r in rows],
               "summary": {k: _json_cell(v) for k, v in summary.items()}}
        if config.timestamp:
            doc["generated"] = datetime.now(timezone.utc).isoformat()
        text = json.dumps(doc, indent=2) + "\n"
    else:
        buf = io.StringIO()
        if config.timestamp:
            buf.write(f"# generated {datetime.now(timezone.utc).isoformat()}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for r in rows:
            writer.writerow([_fmt_cell(r[c]) for c in columns])
        text = buf.getvalue()
    if config.output in ("-", ""):
        sys.stdout.write(text)
    else:
        with open(config.output, "w", newline="") as fh:
            fh.write(text)


def _map_ordered(fn, items, threads: int):
    """Apply fn preserving input order; threads only add concurrency."""
    if threads <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


# --- verify ---------------------------------------------------------------

def _verify_cases(config: RunConfig) -> list[IdentityCase]:
    wanted = config.identities or tuple(i.value for i in _ID_ORDER)
    by_value = {i.value: i for i in _ID_ORDER}
    bad = [w for w in wanted if w not in by_value]
    if bad:
        raise ValueError(f"unknown identities: {', '.join(bad)}")
    ids = [i for i in _ID_ORDER if i.value in set(wanted)]
    if config.x_min < 1 or config.x_max < config.x_min:
        raise ValueError(
            f"need 1 <= x-min <= x-max, got [{config.x_min}, {config.x_max}]")
    if config.step < 1:
        raise ValueError(f"step must be >= 1, got {config.step}")
    xs = list(range(config.x_min, config.x_max + 1, config.step))
    fixed_s = {Identity.EQ6: 0.0, Identity.EQ7: 1.0, Identity.EQ16: 1.0,
               Identity.EQ17: 0.0, Identity.EQ18: 1.0}
    cases = []
    for ident in ids:
        for x in xs:
            if ident in (Identity.EQ3, Identity.EQ13) and (
                    x > TRIPLE_LOOP_FLOAT_BOUND):
                continue
            s_eff = fixed_s.get(ident, config.s)
            if ident in (Identity.EQ2, Identity.EQ12):
                for j in sorted({x, (x + x * x) // 2, x * x}):
                    cases.append(IdentityCase(ident, x, j, s_eff, config.mode))
            else:
                cases.append(IdentityCase(ident, x, None, s_eff, config.mode))
    return cases


def _run_verify(config: RunConfig) -> int:
    cases = _verify_cases(config)
    # Window identities only ever index tables up to x; the square
    # family reaches x^2.
    window = (Identity.EQ1, Identity.EQ2, Identity.EQ11, Identity.EQ12)
    need = max(c.x if c.identity in window else c.x * c.x for c in cases)
    cache = SequenceCache(need)
    # Warm every lazily built table before fanning out, so worker
    # threads only read shared state.
    for s in sorted({c.s for c in cases}):
        cache.harmonic_float(s)
        cache.oscillatory_float(s)

    def one(case: IdentityCase) -> dict:
        res = verify_case(case, cache=cache, tolerance=config.tolerance)
        return {"identity": case.identity.value, "x": case.x, "j": case.j,
                "s": case.s, "mode": res.kind, "lhs": res.lhs, "rhs": res.rhs,
                "residual": res.value, "pass": res.passed}

    rows = _map_ordered(one, cases, config.threads)
    failures = [r for r in rows if not r["pass"]]
    summary = {"cases": len(rows), "failures": len(failures),
               "tolerance": config.tolerance,
               "failed_at": [f"{r['identity']}@x={r['x']}" for r in failures]}
    _emit(config, _VERIFY_COLUMNS, rows, summary)
    return 0 if not failures else 1


# --- gamma ------------------------------------------------------------------

def _run_gamma(config: RunConfig) -> int:
    if not config.points:
        raise ValueError("gamma needs at least one point")
    if min(config.points) < 2:
        raise ValueError("gamma points must be >= 2")
    study = gamma_convergence_study(tuple(config.points))
    rows = [{"x": r.x, "estimate": r.estimate, "reference": r.reference,
             "abs_error": r.abs_error, "scaled_error": r.scaled_error}
            for r in study.rows]
    summary = {"max_scaled_error": study.max_scaled_error,
               "doubling_ratios": [float(r) for r in study.doubling_ratios],
               "scaled_error_bounded": study.scaled_error_bounded}
    _emit(config, _GAMMA_COLUMNS, rows, summary)
    return 0 if study.scaled_error_bounded else 1


# --- induction --------------------------------------------------------------

def _run_induction(config: RunConfig) -> int:
    mu_values = None
    if config.mu_file:
        mu_values = np.loadtxt(config.mu_file, dtype=np.int64, ndmin=1)
    report = induction_sweep(config.x_max, n=config.n, grid=config.grid,
                             mu_values=mu_values)
    rows = [{"x": r.x, "n": r.n, "sup_M": r.sup_M, "argmax_y": r.argmax_y,
             "sup_M_sq": r.sup_M_sq, "argmax_y_sq": r.argmax_y_sq,
             "lhs": r.lhs, "rhs": r.rhs, "ratio": r.ratio,
             "minimal_C": r.minimal_C, "step_holds": r.step_holds}
            for r in report.rows]
    summary = {"x_max": report.x_max, "n": report.n, "grid": report.grid,
               "max_ratio": report.max_ratio, "minimal_C": report.minimal_C,
               "violations": list(report.violations),
               "bound_x0": report.params.x0, "bound_C": report.params.C}
    _emit(config, _INDUCTION_COLUMNS, rows, summary)
    return 0 if not report.violations else 1


# --- sieve / mertens / bench -------------------------------------------------

def _run_sieve(config: RunConfig) -> int:
    if not 1 <= config.lo <= config.hi:
        raise ValueError(f"need 1 <= lo <= hi, got [{config.lo}, {config.hi}]")
    table = mobius_segment(config.lo, config.hi)
    base = 0 if config.lo == 1 else mertens_sublinear(config.lo - 1)
    running = base + np.cumsum(table.values, dtype=np.int64)
    rows = [{"k": k, "mu": int(table[k]), "mertens": int(running[k - config.lo])}
            for k in range(config.lo, config.hi + 1)]
    summary = {"lo": config.lo, "hi": config.hi,
               "mertens_at_hi": int(running[-1])}
    _emit(config, _SIEVE_COLUMNS, rows, summary)
    return 0


def _run_mertens(config: RunConfig) -> int:
    if config.x < 1:
        raise ValueError(f"x must be >= 1, got {config.x}")
    value = mertens_sublinear(config.x)
    rows = [{"x": config.x, "mertens": value}]
    _emit(config, _MERTENS_COLUMNS, rows, {"x": config.x, "mertens": value})
    return 0


def _run_bench(config: RunConfig) -> int:
    rows = []
    for target in config.targets:
        t0 = time.perf_counter()
        if target == "mertens":
            result = mertens_sublinear(config.x)
            size = config.x
        elif target == "sieve":
            table = mobius_sieve(config.x)
            result = int(table.values.sum())
            size = config.x
        elif target == "square-table":
            m_small, m_sq = mertens_square_table(config.x_max)
            result = int(m_sq[config.x_max])
            size = config.x_max * config.x_max
        else:
            raise ValueError(f"unknown bench target {target!r}")
        rows.append({"operation": target, "size": size,
                     "seconds": time.perf_counter() - t0, "result": result})
    _emit(config, _BENCH_COLUMNS, rows, {"targets": list(config.targets)})
    return 0


_RUNNERS = {"sieve": _run_sieve, "mertens": _run_mertens,
            "verify": _run_verify, "gamma": _run_gamma,
            "induction": _run_induction, "bench": _run_bench}


def run(config: RunConfig) -> int:
    """Execute one configured command; returns the process exit code."""
    runner = _RUNNERS.get(config.command)
    if runner is None:
        print(f"error: unknown command {config.command!r}", file=sys.stderr)
        return 2
    try:
        return runner(config)
    except (CapacityError, MemoryError) as exc:
        print(f"error: capacity: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("-o", "--output", default="-",
                   help="output path, '-' for stdout (default)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--threads", type=int, default=1,
                   help="worker threads; output is identical for any value")
    p.add_argument("--no-timestamp", action="store_true",
                   help="omit the generated-at line for byte-stable output")
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mertenskit",
        description="Mobius/Mertens identity verification and bound sweeps")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sieve", help="mu and Mertens over a window")
    p.add_argument("--lo", type=int, default=1)
    p.add_argument("--hi", type=int, default=100)
    _add_common(p)

    p = sub.add_parser("mertens", help="Mertens value via sublinear recursion")
    p.add_argument("--x", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("verify", help="identity residual sweep")
    p.add_argument("--id", dest="identities", action="append", default=[],
                   help="identity name (eq1..eq18); repeatable; default all")
    p.add_argument("--x-min", type=int, default=2)
    p.add_argument("--x-max", type=int, default=200)
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--s", type=float, default=1.0,
                   help="exponent for the s-generic identities")
    p.add_argument("--mode", choices=("auto", "exact", "float"),
                   default="auto")
    _add_common(p)

    p = sub.add_parser("gamma", help="gamma-series convergence table")
    p.add_argument("--points", default="50,100,200,400,800",
                   help="comma-separated truncation points")
    _add_common(p)

    p = sub.add_parser("induction", help="sup-bound step comparison")
    p.add_argument("--x-max", type=int, default=10000)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--grid", choices=("default", "all"), default="default")
    p.add_argument("--mu-file", default=None,
                   help="whitespace-separated mu values for k=1.., replacing "
                        "the sieve (synthetic-data runs)")
    _add_common(p)

    p = sub.add_parser("bench", help="time the heavy evaluators")
    p.add_argument("--target", dest="targets", action="append", default=[],
                   help="mertens | sieve | square-table; repeatable")
    p.add_argument("--x", type=int, default=10 ** 8)
    p.add_argument("--x-max", type=int, default=1000)
    _add_common(p)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        points = tuple(int(t) for t in str(
            getattr(args, "points", "")).split(",") if t.strip())
    except ValueError:
        print("error: --points must be comma-separated integers",
              file=sys.stderr)
        return 2
    config = RunConfig(
        command=args.command,
        output=args.output,
        format=args.format,
        threads=max(1, args.threads),
        timestamp=not args.no_timestamp,
        tolerance=args.tolerance,
        lo=getattr(args, "lo", 1),
        hi=getattr(args, "hi", 100),
        x=getattr(args, "x", 10 ** 6),
        identities=tuple(getattr(args, "identities", []) or []),
        x_min=getattr(args, "x_min", 2),
        x_max=getattr(args, "x_max", 200),
        step=getattr(args, "step", 1),
        s=getattr(args, "s", 1.0),
        mode=getattr(args, "mode", "auto"),
        points=points or (50, 100, 200, 400, 800),
        n=getattr(args, "n", 1),
        grid=getattr(args, "grid", "default"),
        mu_file=getattr(args, "mu_file", None),
        targets=tuple(getattr(args, "targets", []) or ["mertens"]),
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
