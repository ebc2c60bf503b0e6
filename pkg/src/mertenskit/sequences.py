"""Prefix sequences over the Mobius function and their evaluators.

Central objects, for a fixed truncation point x:

    mertens(x)            M_x       = sum_{k<=x} mu(k)
    oscillatory(x, s)     M_x(s)    = sum_{k<=x} mu(k) / k^s
    harmonic(x, s)        H_x(s)    = sum_{k<=x} 1 / k^s

s = 0 collapses to integer counting (H_x(0) = x), s = 1 is the main
object of study (written m_x for M_x(1)).

Float paths are reproducible by construction: one-shot sums use
math.fsum (exactly rounded, hence order independent) and prefix tables
use a Neumaier compensated running sum in ascending k.  Exact paths use
integers (s = 0) or Fraction (s = 1, bounded input size).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import fsum, isqrt, log

import numpy as np

from .arith import MobiusTable, mobius_sieve
from .config import RATIONAL_BOUND, check_capacity
from .exact import lcm_upto

# Euler-Mascheroni constant, 50 published decimal digits; the float
# keeps the correctly rounded 17 significant digits.
EULER_GAMMA_DIGITS = "0.57721566490153286060651209008240243104215933593992"
EULER_GAMMA = float(EULER_GAMMA_DIGITS)

__all__ = [
    "EULER_GAMMA",
    "EULER_GAMMA_DIGITS",
    "ExactModeError",
    "OscillatoryValue",
    "RationalBoundError",
    "SequenceCache",
    "harmonic",
    "harmonic_asymptotic",
    "mertens_sublinear",
    "mertens_value",
    "oscillatory",
]


class ExactModeError(ValueError):
    """Exact mode was requested for an exponent outside {0, 1}."""


class RationalBoundError(ValueError):
    """Exact s = 1 evaluation was requested beyond the rational bound."""


def _compensated_cumsum(terms: np.ndarray) -> np.ndarray:
    """Running sums of `terms` with Neumaier compensation, ascending."""
    out = np.empty(len(terms), dtype=np.float64)
    total = 0.0
    comp = 0.0
    for i, v in enumerate(terms.tolist()):
        t = total + v
        if abs(total) >= abs(v):
            comp += (total - t) + v
        else:
            comp += (v - t) + total
        total = t
        out[i] = total + comp
    return out


class SequenceCache:
    """Shared prefix tables over 1..limit, indexed by absolute k.

    Eager: mu (int8) and the integer Mertens prefix.  Everything else
    (float prefix tables per exponent, exact rational prefixes) is built
    on first use and kept.  Arrays have length limit+1 with slot 0 a
    zero pad, so table[k] is the value at k with no offset bookkeeping.
    """

    def __init__(self, limit: int):
        if limit < 1:
            raise ValueError(f"limit must be >= 1, got {limit}")
        check_capacity(20 * limit, "sequence cache")
        self.limit = limit
        table = mobius_sieve(limit)
        self.mu = np.concatenate((np.zeros(1, dtype=np.int8), table.values))
        self.mertens = np.concatenate((
            np.zeros(1, dtype=np.int64),
            np.cumsum(self.mu[1:], dtype=np.int64),
        ))
        self._float_tables: dict[tuple[str, float], np.ndarray] = {}
        self._exact_m: list[Fraction] | None = None
        self._exact_h: list[Fraction] | None = None
        self.sublinear_memo: dict[int, int] = {}

    def mobius_table(self) -> MobiusTable:
        return MobiusTable(lo=1, values=self.mu[1:])

    def _float_prefix(self, kind: str, s: float) -> np.ndarray:
        key = (kind, float(s))
        got = self._float_tables.get(key)
        if got is not None:
            return got
        check_capacity(8 * (self.limit + 1), f"float {kind} prefix")
        k = np.arange(1, self.limit + 1, dtype=np.float64)
        if s == 1.0:
            powers = 1.0 / k
        elif s == 0.0:
            powers = np.ones_like(k)
        else:
            powers = k ** (-float(s))
        if kind == "oscillatory":
            powers = powers * self.mu[1:]
        out = np.empty(self.limit + 1, dtype=np.float64)
        out[0] = 0.0
        out[1:] = _compensated_cumsum(powers)
        self._float_tables[key] = out
        return out

    def oscillatory_float(self, s: float) -> np.ndarray:
        """Prefix table of M_k(s) as float64, k = 0..limit."""
        return self._float_prefix("oscillatory", s)

    def harmonic_float(self, s: float) -> np.ndarray:
        """Prefix table of H_k(s) as float64, k = 0..limit."""
        return self._float_prefix("harmonic", s)

    def _exact_prefix(self, kind: str) -> list[Fraction]:
        cached = self._exact_m if kind == "oscillatory" else self._exact_h
        if cached is not None:
            return cached
        n = min(self.limit, RATIONAL_BOUND)
        L = lcm_upto(n)
        vals = [Fraction(0)]
        acc = 0
        for k in range(1, n + 1):
            w = L // k
            acc += int(self.mu[k]) * w if kind == "oscillatory" else w
            vals.append(Fraction(acc, L))
        if kind == "oscillatory":
            self._exact_m = vals
        else:
            self._exact_h = vals
        return vals

    def oscillatory_exact(self, x: int) -> Fraction:
        """m_x = M_x(1) as an exact Fraction; x capped by the rational bound."""
        if x > min(self.limit, RATIONAL_BOUND):
            raise RationalBoundError(
                f"exact m_x limited to x <= {min(self.limit, RATIONAL_BOUND)}, got {x}")
        return self._exact_prefix("oscillatory")[x]

    def harmonic_exact(self, x: int) -> Fraction:
        """H_x = H_x(1) as an exact Fraction; x capped by the rational bound."""
        if x > min(self.limit, RATIONAL_BOUND):
            raise RationalBoundError(
                f"exact H_x limited to x <= {min(self.limit, RATIONAL_BOUND)}, got {x}")
        return self._exact_prefix("harmonic")[x]


def mertens_value(x: int, cache: SequenceCache) -> int:
    """M_x from a prefix table; x must lie within the cache."""
    if not 1 <= x <= cache.limit:
        raise ValueError(f"x = {x} outside cached range 1..{cache.limit}")
    return int(cache.mertens[x])


# Grow-only base table for the sublinear evaluator, shared across calls
# so repeated queries reuse both the sieve and the memoized recursion.
_SUBLINEAR_TABLE: dict[str, object] = {"limit": 0, "mertens": None}
_SUBLINEAR_MEMO: dict[int, int] = {}


def _sublinear_base(limit: int) -> np.ndarray:
    if _SUBLINEAR_TABLE["limit"] < limit:
        check_capacity(10 * limit, "sublinear base table")
        table = mobius_sieve(limit)
        mer = np.concatenate((
            np.zeros(1, dtype=np.int64),
            np.cumsum(table.values, dtype=np.int64),
        ))
        _SUBLINEAR_TABLE["limit"] = limit
        _SUBLINEAR_TABLE["mertens"] = mer
        _SUBLINEAR_MEMO.clear()
    return _SUBLINEAR_TABLE["mertens"]


def _mertens_recurse(v: int, tab: np.ndarray, tab_limit: int,
                     memo: dict[int, int]) -> int:
    """M(v) = 1 - sum_{i=2..v} M(v//i), grouped over quotient blocks."""
    if v <= tab_limit:
        return int(tab[v])
    hit = memo.get(v)
    if hit is not None:
        return hit
    d = isqrt(v)
    total = 0
    # Head: distinct i = 2..d.  Arguments above the base table recurse;
    # depth is logarithmic because v//i shrinks geometrically.
    args = v // np.arange(2, d + 1, dtype=np.int64)
    big = args > tab_limit
    if big.any():
        total += sum(_mertens_recurse(int(a), tab, tab_limit, memo)
                     for a in args[big])
        args = args[~big]
    total += int(tab[args].sum())
    # Tail: group the i > d by the shared quotient q = v//i; the count
    # of i in (d, v] with v//i == q is v//q - max(v//(q+1), d).
    q_max = v // (d + 1)
    if q_max > 0:
        qs = np.arange(1, q_max + 1, dtype=np.int64)
        counts = v // qs - np.maximum(v // (qs + 1), d)
        total += int(np.dot(counts, tab[qs]))
    result = 1 - total
    memo[v] = result
    return result


def mertens_sublinear(x: int, cache: SequenceCache | None = None) -> int:
    """M_x without sieving to x, via the divisor-sum recursion.

    Runs on a base table of size ~x^(2/3) plus memoized recursion over
    the quotient set of x; practical well past 10^8.  When `cache`
    already covers the needed base range its tables are reused.
    """
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    base_limit = max(1024, int(round(x ** (2.0 / 3.0))))
    if cache is not None and cache.limit >= min(x, base_limit):
        tab, tab_limit, memo = cache.mertens, cache.limit, cache.sublinear_memo
    else:
        tab = _sublinear_base(min(x, base_limit))
        tab_limit, memo = _SUBLINEAR_TABLE["limit"], _SUBLINEAR_MEMO
    if x <= tab_limit:
        return int(tab[x])
    return _mertens_recurse(x, tab, tab_limit, memo)


@dataclass(frozen=True)
class OscillatoryValue:
    """One evaluation of M_x(s) with its provenance pinned."""

    x: int
    s: float
    mode: str                      # "exact" | "float"
    value: int | Fraction | float


def _mu_values(x: int, cache: SequenceCache | None) -> np.ndarray:
    if cache is not None and cache.limit >= x:
        return cache.mu[1:x + 1]
    return mobius_sieve(x).values


def oscillatory(x: int, s: float, mode: str = "float",
                cache: SequenceCache | None = None) -> OscillatoryValue:
    """M_x(s) = sum_{k<=x} mu(k)/k^s.

    Exact mode supports s = 0 (integer M_x) and s = 1 (Fraction, x
    bounded so denominators stay manageable); float mode supports any
    real s via exactly rounded summation.
    """
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    if mode == "exact":
        if s == 0:
            if cache is not None and cache.limit >= x:
                return OscillatoryValue(x, 0.0, "exact", mertens_value(x, cache))
            return OscillatoryValue(x, 0.0, "exact", mertens_sublinear(x))
        if s == 1:
            if x > RATIONAL_BOUND:
                raise RationalBoundError(
                    f"exact s=1 limited to x <= {RATIONAL_BOUND}, got {x}")
            if cache is not None and cache.limit >= x:
                return OscillatoryValue(x, 1.0, "exact", cache.oscillatory_exact(x))
            mu = mobius_sieve(x).values
            L = lcm_upto(x)
            num = sum(int(mu[k - 1]) * (L // k) for k in range(1, x + 1))
            return OscillatoryValue(x, 1.0, "exact", Fraction(num, L))
        raise ExactModeError(f"exact mode requires s in {{0, 1}}, got s = {s}")
    if mode != "float":
        raise ValueError(f"mode must be 'exact' or 'float', got {mode!r}")
    mu = _mu_values(x, cache)
    ks = np.arange(1, x + 1, dtype=np.float64)
    terms = mu * ks ** (-float(s))
    return OscillatoryValue(x, float(s), "float", fsum(terms.tolist()))


def harmonic(x: int, s: float, mode: str = "float") -> int | Fraction | float:
    """H_x(s) = sum_{k<=x} 1/k^s; H_x(0) = x exactly."""
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    if mode == "exact":
        if s == 0:
            return x
        if s == 1:
            if x > RATIONAL_BOUND:
                raise RationalBoundError(
                    f"exact s=1 limited to x <= {RATIONAL_BOUND}, got {x}")
            L = lcm_upto(x)
            return Fraction(sum(L // k for k in range(1, x + 1)), L)
        raise ExactModeError(f"exact mode requires s in {{0, 1}}, got s = {s}")
    if mode != "float":
        raise ValueError(f"mode must be 'exact' or 'float', got {mode!r}")
    ks = np.arange(1, x + 1, dtype=np.float64)
    return fsum((ks ** (-float(s))).tolist())


def harmonic_asymptotic(x: int) -> float:
    """Leading asymptotic log(x) + gamma of H_x; error is O(1/x)."""
    if x < 2:
        raise ValueError(f"x must be >= 2, got {x}")
    return log(x) + EULER_GAMMA
