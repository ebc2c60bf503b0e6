"""Empirical induction step for square-root bounds on Mertens sums.

For the bound family |M_y| <= C sqrt(y) (log y)^n the step from range
[3, x] to [3, x^2] rests on the numeric comparison

    sup_{3<=y<=x^2} |M_y|  vs  2^n sqrt(x) sup_{3<=y<=x} |M_y|,

because C sqrt(x^2) (log x^2)^n = C 2^n x (log x)^n chains the bound at
x through to x^2.  This module computes both suprema from one sieve of
mu up to x^2 (segmented, so x = 10^4 means 10^8 sieved values), reports
the step ratio and the minimal admissible C over a sweep, and
cross-checks the double sum sum mu(i)mu(j) floor(y^2/ij) that the
square identities tie to M_{y^2}.
"""

from dataclasses import dataclass
from math import isqrt, log, sqrt

import numpy as np

from .arith import _mobius_range, primes_up_to
from .config import RATIONAL_BOUND, check_capacity
from .identities import Residual, verify_eq17, verify_eq18
from .sequences import SequenceCache

__all__ = [
    "BoundParams",
    "InductionReport",
    "InductionRow",
    "SupRecord",
    "check_induction_step",
    "double_sum_cross_check",
    "induction_sweep",
    "mertens_square_table",
    "minimal_constant",
    "square_sum_comparison",
    "sup_mertens",
]

_SEGMENT = 1 << 22


@dataclass(frozen=True)
class BoundParams:
    """Parameters of one bound |M_y| <= C sqrt(y) (log y)^n for y >= x0."""

    x0: int
    C: float
    n: int

    def __post_init__(self):
        if self.x0 <= 2:
            raise ValueError(f"x0 must be > 2, got {self.x0}")
        if not self.C > 0:
            raise ValueError(f"C must be positive, got {self.C}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")


@dataclass(frozen=True)
class SupRecord:
    """Running suprema of |M_y| over [3, x] and |M_{y^2}| over the same y."""

    x: int
    sup_M: int
    argmax_y: int
    sup_M_sq: int
    argmax_y_sq: int


@dataclass(frozen=True)
class InductionRow:
    x: int
    n: int
    sup_M: int
    argmax_y: int
    sup_M_sq: int
    argmax_y_sq: int
    lhs: int            # sup over y <= x of |M_{y^2}|
    rhs: float          # 2^n sqrt(x) sup_M
    ratio: float
    minimal_C: float
    step_holds: bool


@dataclass(frozen=True)
class InductionReport:
    n: int
    x_max: int
    grid: str
    rows: tuple[InductionRow, ...]
    max_ratio: float
    minimal_C: float
    violations: tuple[int, ...]
    params: BoundParams


def mertens_square_table(x_max: int, mu_values=None,
                         segment_size: int = _SEGMENT):
    """Mertens prefix values at 1..x_max and at the squares y^2, y <= x_max.

    Returns (m_small, m_sq): int64 arrays indexed by k and by y, slot 0
    zero.  The sieve runs in segments so only O(segment) memory is live
    even though the range is x_max^2.  `mu_values` (mu at k = 1..x_max^2,
    any int array-like) replaces the sieve when given; this is the hook
    for synthetic-counterexample runs.
    """
    if x_max < 3:
        raise ValueError(f"x_max must be >= 3, got {x_max}")
    limit = x_max * x_max
    check_capacity(26 * segment_size + 16 * x_max, "segmented square table")
    if mu_values is not None:
        check_capacity(16 * limit, "injected mu table")
        mu = np.asarray(mu_values, dtype=np.int64)
        if len(mu) < limit:
            raise ValueError(
                f"mu_values must cover 1..{limit}, got {len(mu)} entries")
        mer = np.concatenate((np.zeros(1, dtype=np.int64),
                              np.cumsum(mu[:limit], dtype=np.int64)))
        m_small = mer[:x_max + 1].copy()
        ys = np.arange(0, x_max + 1, dtype=np.int64)
        return m_small, mer[ys * ys]
    primes = primes_up_to(x_max)
    m_small = np.zeros(x_max + 1, dtype=np.int64)
    m_sq = np.zeros(x_max + 1, dtype=np.int64)
    base = 0
    for lo in range(1, limit + 1, segment_size):
        hi = min(lo + segment_size - 1, limit)
        mu = _mobius_range(lo, hi, primes)
        csum = np.cumsum(mu, dtype=np.int64)
        csum += base
        if lo <= x_max:
            top = min(hi, x_max)
            m_small[lo:top + 1] = csum[:top - lo + 1]
        y_lo = isqrt(lo - 1) + 1
        y_hi = isqrt(hi)
        if y_lo <= y_hi:
            ys = np.arange(y_lo, y_hi + 1, dtype=np.int64)
            m_sq[y_lo:y_hi + 1] = csum[ys * ys - lo]
        base = int(csum[-1])
    return m_small, m_sq


def sup_curves(m_small: np.ndarray, m_sq: np.ndarray):
    """Running maxima of |M_y| and |M_{y^2}| with first-attaining argmax.

    Returns (sup_m, arg_m, sup_sq, arg_sq) indexed by x; entries below
    x = 3 are placeholders (the suprema start at y = 3).
    """
    out = []
    for values in (m_small, m_sq):
        a = np.abs(values).astype(np.int64)
        a[:min(3, len(a))] = -1
        run = np.maximum.accumulate(a)
        prev = np.concatenate((np.full(1, -2, dtype=np.int64), run[:-1]))
        record = a > prev
        arg = np.maximum.accumulate(
            np.where(record, np.arange(len(a), dtype=np.int64), 0))
        out.extend((run, arg))
    return tuple(out)


def sup_mertens(x: int, cache: SequenceCache | None = None,
                curves=None) -> SupRecord:
    """SupRecord at x, from precomputed curves or a cache covering x^2."""
    if x < 3:
        raise ValueError(f"x must be >= 3, got {x}")
    if curves is None:
        if cache is None or cache.limit < x * x:
            cache = SequenceCache(x * x)
        ys = np.arange(0, x + 1, dtype=np.int64)
        curves = sup_curves(cache.mertens[:x + 1].copy(),
                            cache.mertens[ys * ys])
    sup_m, arg_m, sup_sq, arg_sq = curves
    if x >= len(sup_m):
        raise ValueError(f"x = {x} beyond the computed range {len(sup_m) - 1}")
    return SupRecord(x=x, sup_M=int(sup_m[x]), argmax_y=int(arg_m[x]),
                     sup_M_sq=int(sup_sq[x]), argmax_y_sq=int(arg_sq[x]))


def minimal_constant(x: int, n: int, cache: SequenceCache | None = None) -> float:
    """Smallest C with sup_{3<=y<=x} |M_y| <= C sqrt(x) (log x)^n."""
    if x < 3:
        raise ValueError(f"x must be >= 3, got {x}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if cache is None or cache.limit < x:
        cache = SequenceCache(x)
    sup_m = int(np.abs(cache.mertens[3:x + 1]).max())
    return sup_m / (sqrt(x) * log(x) ** n)


def _chain_factor(x: int, n: int) -> float:
    """2^n sqrt(x), validated against the bound chained through x^2.

    C sqrt(x^2) (log x^2)^n must equal C 2^n x (log x)^n; a mismatch
    beyond float rounding means the step comparison itself is wrong.
    """
    direct = sqrt(float(x * x)) * log(float(x * x)) ** n
    chained = (2.0 ** n) * x * log(x) ** n
    if abs(direct - chained) > 1e-12 * abs(direct):
        raise ArithmeticError(
            f"chain factor mismatch at x={x}, n={n}: {direct} vs {chained}")
    return (2.0 ** n) * sqrt(x)


def check_induction_step(x: int, n: int = 1, curves=None,
                         cache: SequenceCache | None = None) -> InductionRow:
    """One row of the step comparison at x.

    lhs = sup_{y<=x} |M_{y^2}| and rhs = 2^n sqrt(x) sup_{y<=x} |M_y|;
    the step holds when lhs <= rhs.  minimal_C is the smallest constant
    making the y <= x bound tight at x.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rec = sup_mertens(x, cache=cache, curves=curves)
    rhs = _chain_factor(x, n) * rec.sup_M
    ratio = rec.sup_M_sq / rhs
    min_c = rec.sup_M / (sqrt(x) * log(x) ** n)
    return InductionRow(x=x, n=n, sup_M=rec.sup_M, argmax_y=rec.argmax_y,
                        sup_M_sq=rec.sup_M_sq, argmax_y_sq=rec.argmax_y_sq,
                        lhs=rec.sup_M_sq, rhs=rhs, ratio=ratio,
                        minimal_C=min_c, step_holds=rec.sup_M_sq <= rhs)


def _default_grid(x_max: int, sup_m: np.ndarray) -> list[int]:
    """Dense start, then log-spaced points, plus every new |M| record."""
    xs = set(range(3, min(1000, x_max) + 1))
    if x_max > 1000:
        marks = np.unique(np.round(np.logspace(
            np.log10(1001), np.log10(x_max), 80)).astype(np.int64))
        xs.update(int(v) for v in marks)
    records = np.nonzero(sup_m[1:] > sup_m[:-1])[0] + 1
    xs.update(int(v) for v in records if v >= 3)
    xs.add(x_max)
    return sorted(v for v in xs if 3 <= v <= x_max)


def induction_sweep(x_max: int, n: int = 1, grid: str = "default",
                    mu_values=None) -> InductionReport:
    """Step comparison over a grid of x up to x_max.

    grid "all" checks every x in [3, x_max]; "default" checks every
    x <= 1000, log-spaced points above, and every x where sup |M_y|
    increases.  The summary carries the worst ratio, the minimal C
    admissible over the whole sweep, and any step violations.
    """
    if grid not in ("all", "default"):
        raise ValueError(f"grid must be 'all' or 'default', got {grid!r}")
    m_small, m_sq = mertens_square_table(x_max, mu_values=mu_values)
    curves = sup_curves(m_small, m_sq)
    xs = (list(range(3, x_max + 1)) if grid == "all"
          else _default_grid(x_max, curves[0]))
    rows = tuple(check_induction_step(x, n, curves=curves) for x in xs)
    violations = tuple(r.x for r in rows if not r.step_holds)
    minimal_c = max(r.minimal_C for r in rows)
    params = BoundParams(x0=3, C=minimal_c, n=n)
    return InductionReport(n=n, x_max=x_max, grid=grid, rows=rows,
                           max_ratio=max(r.ratio for r in rows),
                           minimal_C=minimal_c, violations=violations,
                           params=params)


def double_sum_cross_check(y: int, cache: SequenceCache | None = None,
                           tolerance: float | None = None) -> Residual:
    """Check sum_{i,j<=y} mu(i)mu(j) floor(y^2/ij) = 2 M_y - M_{y^2} and
    its floor/fraction companion form in one record.

    The floor form is certified with integers at any y; the companion
    (y^2 m_y^2 minus the fractional double sum) is exact rational for
    y within the rational bound and float-checked beyond it.
    """
    if cache is None or cache.limit < y * y:
        cache = SequenceCache(y * y)
    floor_form = verify_eq17(y, cache)
    frac_form = verify_eq18(y, "exact" if y <= RATIONAL_BOUND else "float",
                            cache, tolerance)
    lhs = int(cache.mertens[y * y])
    rhs = floor_form.rhs
    if frac_form.kind == "exact":
        val = floor_form.exact_value or frac_form.exact_value
        return Residual(kind="exact", lhs=lhs, rhs=rhs, exact_value=val)
    val = (float(floor_form.exact_value) if floor_form.exact_value
           else frac_form.float_value)
    return Residual(kind="float", lhs=float(lhs), rhs=float(rhs),
                    float_value=val, tolerance=frac_form.tolerance)


def square_sum_comparison(y_max: int,
                          cache: SequenceCache | None = None) -> list[dict]:
    """Tabulate |double sum| vs |M_{y^2}| for y up to y_max.

    The two differ by exactly 2 M_y, so their magnitudes track each
    other; rows carry both magnitudes and the offset for inspection.
    The double sum is evaluated directly (grouped by products), not via
    the identity.
    """
    from .identities import convolution_coeffs

    if y_max < 3:
        raise ValueError(f"y_max must be >= 3, got {y_max}")
    if cache is None or cache.limit < y_max * y_max:
        cache = SequenceCache(y_max * y_max)
    rows = []
    for y in range(3, y_max + 1):
        yy = y * y
        ps, cs = convolution_coeffs(y, "mobius", cache).nonzero()
        dsum = int(np.dot(cs, yy // ps))
        rows.append({
            "y": y,
            "double_sum": dsum,
            "mertens_at_square": int(cache.mertens[yy]),
            "offset_2M": 2 * int(cache.mertens[y]),
            "abs_gap": abs(dsum) - abs(int(cache.mertens[yy])),
        })
    return rows
