"""Mobius sieving and floor-quotient utilities.

The Mobius function mu(k) is 0 when k has a squared prime factor and
(-1)^r when k is a product of r distinct primes (mu(1) = 1, the empty
product).  Everything downstream is built from contiguous mu tables and
from the decomposition of [1, x] into maximal blocks on which floor(x/i)
is constant.
"""

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .config import check_capacity

__all__ = [
    "MobiusTable",
    "QuotientBlocks",
    "mobius_sieve",
    "mobius_segment",
    "nested_floor_check",
    "primes_up_to",
    "quotient_blocks",
]


def primes_up_to(n: int) -> np.ndarray:
    """All primes <= n, ascending (int64)."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p:: p] = False
    return np.nonzero(sieve)[0].astype(np.int64)


@dataclass(frozen=True)
class MobiusTable:
    """mu values for the contiguous range [lo, lo + len(values) - 1].

    values is an int8 array; entry j holds mu(lo + j) and is one of
    -1, 0, +1.  Instances are immutable and safe to share across workers.
    """

    lo: int
    values: np.ndarray

    @property
    def hi(self) -> int:
        return self.lo + len(self.values) - 1

    def __getitem__(self, k: int) -> int:
        if not self.lo <= k <= self.hi:
            raise IndexError(f"mu({k}) outside table range [{self.lo}, {self.hi}]")
        return int(self.values[k - self.lo])

    def __len__(self) -> int:
        return len(self.values)


def _mobius_range(lo: int, hi: int, primes: np.ndarray) -> np.ndarray:
    """mu on [lo, hi] given every prime <= sqrt(hi); int8 array."""
    length = hi - lo + 1
    mu = np.ones(length, dtype=np.int8)
    # Product of the distinct sieved primes dividing each k; any k whose
    # product falls short of k has exactly one extra prime factor > sqrt(hi).
    prod = np.ones(length, dtype=np.int64)
    for p in primes:
        p = int(p)
        if p * p > hi:
            break
        start = -lo % p
        mu[start::p] *= -1
        prod[start::p] *= p
        sq = p * p
        start_sq = -lo % sq
        mu[start_sq::sq] = 0
    ks = np.arange(lo, hi + 1, dtype=np.int64)
    mu[prod != ks] *= -1
    if lo == 0:
        mu[0] = 0
    return mu


def mobius_sieve(n: int) -> MobiusTable:
    """Sieve mu(1..n) in one pass.

    Raises CapacityError when the working arrays would exceed the memory
    budget (the int64 product array dominates at 8 bytes per entry).
    """
    if n < 1:
        raise ValueError(f"sieve length must be >= 1, got {n}")
    check_capacity(10 * n, f"mobius_sieve({n})")
    primes = primes_up_to(isqrt(n))
    return MobiusTable(lo=1, values=_mobius_range(1, n, primes))


def mobius_segment(lo: int, hi: int) -> MobiusTable:
    """mu on an arbitrary window [lo, hi], 1 <= lo <= hi.

    Matches mobius_sieve(hi) restricted to the window, without allocating
    below lo.  Primes up to sqrt(hi) are sieved internally.
    """
    if not 1 <= lo <= hi:
        raise ValueError(f"need 1 <= lo <= hi, got lo={lo}, hi={hi}")
    check_capacity(10 * (hi - lo + 1) + 2 * isqrt(hi), f"mobius_segment({lo}, {hi})")
    primes = primes_up_to(isqrt(hi))
    return MobiusTable(lo=lo, values=_mobius_range(lo, hi, primes))


@dataclass(frozen=True)
class QuotientBlocks:
    """Partition of [1, x] into maximal runs of constant floor(x/i).

    blocks holds (q, i_lo, i_hi) triples with floor(x/i) = q for every
    i in [i_lo, i_hi]; q strictly decreases across the list and the
    intervals tile [1, x].  There are at most 2*sqrt(x) + 1 blocks.
    """

    x: int
    blocks: tuple

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)


def quotient_blocks(x: int) -> QuotientBlocks:
    """Enumerate the constant-quotient blocks of x."""
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    blocks = []
    i = 1
    while i <= x:
        q = x // i
        i_hi = x // q
        blocks.append((q, i, i_hi))
        i = i_hi + 1
    return QuotientBlocks(x=x, blocks=tuple(blocks))


def nested_floor_check(a: int, b: int, c: int) -> bool:
    """Truth of floor(floor(a/b)/c) == floor(a/(b*c)).

    This holds for all positive integers; it is what lets a nested
    quotient like (x^2/j)/i collapse to x^2/(j*i) inside the identities.
    """
    if min(a, b, c) < 1:
        raise ValueError("a, b, c must all be >= 1")
    return (a // b) // c == a // (b * c)
