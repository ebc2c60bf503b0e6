"""Scaled-integer engine vs direct Fraction arithmetic."""

from fractions import Fraction
from math import lcm

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mertenskit import ScaledSums, lcm_upto, mobius_sieve


def test_lcm_upto_small():
    assert [lcm_upto(n) for n in range(0, 7)] == [1, 1, 2, 6, 12, 60, 60]
    assert lcm_upto(10) == lcm(*range(1, 11)) == 2520


@given(st.integers(min_value=1, max_value=120))
@settings(max_examples=40, deadline=None)
def test_harmonic_numerators_match_fractions(n):
    ss = ScaledSums(n)
    direct = sum(Fraction(1, k) for k in range(1, n + 1))
    assert ss.harmonic(n) == direct
    # Every weight really is L/k with zero remainder.
    assert all(ss.weights[k] * k == ss.denominator for k in range(1, n + 1))


@given(st.integers(min_value=1, max_value=120))
@settings(max_examples=40, deadline=None)
def test_oscillatory_numerators_match_fractions(n):
    mu = [0] + [mobius_sieve(n)[k] for k in range(1, n + 1)]
    ss = ScaledSums(n, mu=mu)
    direct = sum(Fraction(mu[k], k) for k in range(1, n + 1))
    assert ss.oscillatory(n) == direct


def test_oscillatory_requires_mu():
    ss = ScaledSums(5)
    with pytest.raises(ValueError):
        ss.oscillatory(3)


def test_weight_range_and_extended_lcm():
    # lcm_limit extends divisibility past the table length: weights for
    # divisors up to 24 exist even though sums stop at n = 4.
    ss = ScaledSums(4, lcm_limit=24)
    assert ss.denominator == lcm_upto(24)
    for d in (1, 7, 16, 23, 24):
        assert ss.weight(d) * d == ss.denominator
    with pytest.raises(ValueError):
        ss.weight(25)
    with pytest.raises(ValueError):
        ss.weight(0)


def test_prefixes_are_running_sums():
    ss = ScaledSums(30, mu=[0] + [mobius_sieve(30)[k] for k in range(1, 31)])
    for k in range(1, 31):
        assert ss.harmonic_num[k] - ss.harmonic_num[k - 1] == ss.weights[k]
    assert ss.harmonic(4) == Fraction(25, 12)
    assert ss.oscillatory(3) == Fraction(1, 6)
