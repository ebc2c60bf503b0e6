"""Prefix evaluators: Mertens, oscillatory, harmonic, and the cache.

Mertens spot values at powers of ten are the published ones; everything
else is checked against independent brute-force recomputation.
"""

import random
from fractions import Fraction
from math import fsum, log

import numpy as np
import pytest

from mertenskit import (
    EULER_GAMMA,
    ExactModeError,
    RationalBoundError,
    SequenceCache,
    harmonic,
    harmonic_asymptotic,
    mertens_sublinear,
    mertens_value,
    oscillatory,
)

# Published Mertens values M(10^k).
MERTENS_POWERS = {10: -1, 100: 1, 1000: 2, 10 ** 4: -23, 10 ** 5: -48,
                  10 ** 6: 212}


def test_mertens_oracle_small(cache_small):
    assert mertens_value(10, cache_small) == -1
    assert mertens_value(9, cache_small) == -2
    assert mertens_value(1, cache_small) == 1
    assert mertens_value(2, cache_small) == 0


def test_mertens_published_powers(cache_square):
    for x, expected in MERTENS_POWERS.items():
        assert mertens_value(x, cache_square) == expected
        assert mertens_sublinear(x) == expected


def test_mertens_value_range_check(cache_small):
    with pytest.raises(ValueError):
        mertens_value(0, cache_small)
    with pytest.raises(ValueError):
        mertens_value(cache_small.limit + 1, cache_small)


def test_sublinear_matches_sieve_randomized(cache_square):
    rng = random.Random(20260822)
    for _ in range(300):
        x = rng.randint(1, cache_square.limit)
        assert mertens_sublinear(x) == int(cache_square.mertens[x]), x


def test_sublinear_reuses_supplied_cache(cache_small):
    assert mertens_sublinear(10 ** 4, cache_small) == -23
    assert mertens_sublinear(5, cache_small) == -2


def test_oscillatory_exact_oracles(cache_small):
    assert oscillatory(3, 1, "exact").value == Fraction(1, 6)
    # m_4 = 1 - 1/2 - 1/3 = 1/6 as well (mu(4) = 0).
    assert oscillatory(4, 1, "exact").value == Fraction(1, 6)
    assert oscillatory(10, 0, "exact", cache_small).value == -1
    v = oscillatory(200, 1, "exact", cache_small)
    assert v.mode == "exact" and v.value.denominator > 1


def test_oscillatory_exact_vs_float(cache_small):
    for x in (7, 50, 137, 200):
        exact = oscillatory(x, 1, "exact", cache_small).value
        approx = oscillatory(x, 1, "float", cache_small).value
        assert abs(approx - float(exact)) < 1e-13


def test_oscillatory_mode_errors():
    with pytest.raises(ExactModeError):
        oscillatory(10, 2, "exact")
    with pytest.raises(RationalBoundError):
        oscillatory(201, 1, "exact")
    with pytest.raises(ValueError):
        oscillatory(0, 1)
    with pytest.raises(ValueError):
        oscillatory(10, 1, "fast")


def test_harmonic_oracles():
    assert harmonic(4, 1, "exact") == Fraction(25, 12)
    assert harmonic(10, 1, "exact") == Fraction(7381, 2520)
    assert harmonic(7, 0, "exact") == 7
    assert harmonic(7, 0, "float") == 7.0
    with pytest.raises(ExactModeError):
        harmonic(10, 0.5, "exact")
    with pytest.raises(RationalBoundError):
        harmonic(500, 1, "exact")


def test_harmonic_float_matches_fsum():
    for x, s in [(1000, 1.0), (1000, 2.0), (500, 0.5)]:
        direct = fsum(1.0 / k ** s for k in range(1, x + 1))
        assert harmonic(x, s) == pytest.approx(direct, abs=1e-14)


def test_harmonic_asymptotic_error_shrinks():
    # H_x - (log x + gamma) ~ 1/(2x); check the 1/x envelope.
    errs = []
    for x in (10, 100, 1000):
        err = abs(float(harmonic(x, 1)) - harmonic_asymptotic(x))
        assert err < 1.0 / x
        errs.append(err)
    assert errs[0] > errs[1] > errs[2]
    assert abs(float(harmonic(10, 1)) - (log(10) + EULER_GAMMA)) < 0.06
    with pytest.raises(ValueError):
        harmonic_asymptotic(1)


def test_cache_prefix_tables_match_onepass(cache_small):
    # Neumaier running sums vs exactly rounded fsum at sampled cuts.
    for s in (1.0, 0.5, 2.0):
        table = cache_small.harmonic_float(s)
        osc = cache_small.oscillatory_float(s)
        mu = cache_small.mu
        for k in (1, 2, 17, 400, 9999):
            hs = fsum(1.0 / i ** s for i in range(1, k + 1))
            ms = fsum(int(mu[i]) / i ** s for i in range(1, k + 1))
            assert table[k] == pytest.approx(hs, rel=1e-15, abs=1e-15)
            assert osc[k] == pytest.approx(ms, rel=1e-14, abs=1e-14)


def test_cache_exact_prefixes(cache_small):
    assert cache_small.harmonic_exact(10) == Fraction(7381, 2520)
    assert cache_small.oscillatory_exact(3) == Fraction(1, 6)
    with pytest.raises(RationalBoundError):
        cache_small.oscillatory_exact(201)


def test_cache_mertens_is_mu_cumsum(cache_small):
    mu = cache_small.mu[1:]
    assert np.array_equal(cache_small.mertens[1:],
                          np.cumsum(mu, dtype=np.int64))
    assert cache_small.mertens[0] == 0


def test_euler_gamma_literal():
    # Round-trip of the 50-digit literal to float precision.
    assert EULER_GAMMA == pytest.approx(0.5772156649015329, abs=1e-16)
    assert str(EULER_GAMMA).startswith("0.577215664901532")


def test_memory_budget_env_override(monkeypatch):
    monkeypatch.setenv("MERTENSKIT_MEMORY_BUDGET", "1000")
    from mertenskit.config import CapacityError
    with pytest.raises(CapacityError):
        SequenceCache(10 ** 6)
    monkeypatch.delenv("MERTENSKIT_MEMORY_BUDGET")
    SequenceCache(10)  # budget restored
