"""Identity verifiers: exact-zero certification and float agreement.

Oracles here are independent brute-force evaluations (naive double and
triple loops over (i, j) with no grouping), compared against the grouped
paths bit-for-bit where both sides are integer-valued.
"""

from fractions import Fraction
from math import fsum

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mertenskit import (
    Identity,
    IdentityCase,
    Residual,
    SequenceCache,
    convolution_coeffs,
    verify_case,
    verify_eq1,
    verify_eq2,
    verify_eq3,
    verify_eq5,
    verify_eq6,
    verify_eq7,
    verify_eq11,
    verify_eq12,
    verify_eq13,
    verify_eq15,
    verify_eq16,
    verify_eq17,
    verify_eq18,
)
from mertenskit.sequences import ExactModeError, RationalBoundError


# --- case plumbing --------------------------------------------------------

def test_identity_case_validation():
    IdentityCase(Identity.EQ2, 5, 25, 0.0, "exact")
    with pytest.raises(ValueError):
        IdentityCase(Identity.EQ2, 5, None)          # j required
    with pytest.raises(ValueError):
        IdentityCase(Identity.EQ2, 5, 4)             # j < x
    with pytest.raises(ValueError):
        IdentityCase(Identity.EQ2, 5, 26)            # j > x^2
    with pytest.raises(ValueError):
        IdentityCase(Identity.EQ1, 5, 7)             # j forbidden
    with pytest.raises(ValueError):
        IdentityCase(Identity.EQ6, 5, s=1.0)         # pinned at s=0
    with pytest.raises(ValueError):
        IdentityCase(Identity.EQ18, 5, s=0.0)        # pinned at s=1
    with pytest.raises(ValueError):
        IdentityCase(Identity.EQ1, 0)
    with pytest.raises(ValueError):
        IdentityCase(Identity.EQ1, 5, mode="quick")


def test_residual_pass_logic():
    assert Residual("exact", 1, 1, exact_value=0).passed
    assert not Residual("exact", 1, 2, exact_value=Fraction(1, 3)).passed
    assert Residual("float", 1.0, 1.0, float_value=1e-12, tolerance=1e-9).passed
    assert not Residual("float", 1.0, 1.0, float_value=2e-9,
                        tolerance=1e-9).passed


# --- convolution coefficients ----------------------------------------------

def test_convolution_oracle_x2():
    plain = convolution_coeffs(2, "plain")
    assert {p: plain[p] for p in (1, 2, 3, 4)} == {1: 1, 2: 2, 3: 0, 4: 1}
    mob = convolution_coeffs(2, "mobius")
    assert {p: mob[p] for p in (1, 2, 3, 4)} == {1: 1, 2: -2, 3: 0, 4: 1}


@given(st.integers(min_value=1, max_value=40))
@settings(max_examples=25, deadline=None)
def test_convolution_sums(x):
    cache = SequenceCache(x * x)
    plain = convolution_coeffs(x, "plain", cache)
    mob = convolution_coeffs(x, "mobius", cache)
    # Total pair count and total mu-weight collapse to x^2 and M_x^2.
    assert int(plain.coeffs.sum()) == x * x
    assert int(mob.coeffs.sum()) == int(cache.mertens[x]) ** 2


def test_convolution_matches_bruteforce():
    for x in (3, 7, 12):
        cache = SequenceCache(x * x)
        mu = cache.mu
        plain = np.zeros(x * x + 1, dtype=np.int64)
        mob = np.zeros(x * x + 1, dtype=np.int64)
        for i in range(1, x + 1):
            for j in range(1, x + 1):
                plain[i * j] += 1
                mob[i * j] += int(mu[i]) * int(mu[j])
        assert np.array_equal(convolution_coeffs(x, "plain").coeffs, plain)
        assert np.array_equal(convolution_coeffs(x, "mobius").coeffs, mob)


def test_convolution_rejects_bad_kind():
    with pytest.raises(ValueError):
        convolution_coeffs(3, "fast")


# --- exact zero residuals across the catalogue ------------------------------

@pytest.mark.parametrize("s", [0.0, 1.0])
def test_window_identities_exact(cache_small, s):
    for x in range(1, 61):
        assert verify_eq1(x, s, "exact", cache_small).exact_value == 0, x
        assert verify_eq11(x, s, "exact", cache_small).exact_value == 0, x


@pytest.mark.parametrize("s", [0.0, 1.0])
def test_nested_window_identities_exact(cache_small, s):
    for x in (2, 5, 12, 30):
        for j in sorted({x, x + 1, (x + x * x) // 2, x * x - 1, x * x}):
            r = verify_eq2(x, j, s, "exact", cache_small)
            assert r.exact_value == 0, (x, j)
            r = verify_eq12(x, j, s, "exact", cache_small)
            assert r.exact_value == 0, (x, j)


def test_eq2_rejects_bad_j(cache_small):
    with pytest.raises(ValueError):
        verify_eq2(5, 4, 0.0, "exact", cache_small)
    with pytest.raises(ValueError):
        verify_eq12(5, 26, 0.0, "exact", cache_small)


@pytest.mark.parametrize("s", [0.0, 1.0])
def test_tail_double_sums_exact(cache_small, s):
    # Both summation orders and the complementary head form are folded
    # into the verifier; a zero residual certifies all three.
    for x in range(1, 13):
        assert verify_eq3(x, s, "exact", cache_small).exact_value == 0, x
        assert verify_eq13(x, s, "exact", cache_small).exact_value == 0, x


def test_square_identities_exact_s0(cache_small):
    for x in range(1, 81):
        assert verify_eq6(x, cache_small).exact_value == 0, x
        assert verify_eq17(x, cache_small).exact_value == 0, x


def test_square_identities_exact_s1(cache_small):
    for x in range(1, 31):
        assert verify_eq7(x, "exact", cache_small).exact_value == 0, x
        assert verify_eq16(x, "exact", cache_small).exact_value == 0, x


def test_fraction_form_exact(cache_small):
    for x in range(1, 41):
        r = verify_eq18(x, "exact", cache_small)
        assert r.kind == "exact" and r.exact_value == 0, x


# --- naive vs grouped -------------------------------------------------------

def test_square_identity_naive_double_loop_int(cache_small):
    # Integer-valued inner function: grouped and naive sums must agree
    # bit-for-bit, not just within tolerance.
    for x in (5, 17, 40):
        xx = x * x
        mer = cache_small.mertens
        naive = sum(int(mer[xx // (i * j)])
                    for i in range(1, x + 1) for j in range(1, x + 1))
        ps, cs = convolution_coeffs(x, "plain", cache_small).nonzero()
        grouped = int(np.dot(cs, mer[xx // ps]))
        assert naive == grouped
        # The identity itself: x^2 = 2x - sum.
        assert xx == 2 * x - naive


def test_square_identity_naive_double_loop_float(cache_square):
    # Float inner function: naive per-pair fsum vs grouped-by-product
    # fsum agree to near machine precision.
    for x in (5, 23, 60):
        xx = x * x
        m = cache_square.oscillatory_float(1.0)
        naive = fsum(m[xx // (i * j)] / (i * j)
                     for i in range(1, x + 1) for j in range(1, x + 1))
        ps, cs = convolution_coeffs(x, "plain", cache_square).nonzero()
        grouped = fsum((cs / ps * m[xx // ps]).tolist())
        assert abs(naive - grouped) <= 1e-12


def test_tail_sum_naive_triple_loop(cache_small):
    # Naive j-outer triple loop at s=0 agrees with the verifier's lhs.
    for x in (3, 6, 10):
        xx = x * x
        mer = cache_small.mertens
        naive = sum(int(mer[xx // (j * i)])
                    for j in range(x + 1, xx + 1) for i in range(1, x + 1))
        r = verify_eq3(x, 0.0, "exact", cache_small)
        assert r.lhs == naive
        assert naive == xx - x  # H at s=0 telescopes to the count


# --- float paths -------------------------------------------------------------

@pytest.mark.parametrize("s", [0.5, 1.0, 2.0])
def test_window_identities_float(cache_small, s):
    for x in (10, 137, 1000):
        assert verify_eq1(x, s, "float", cache_small).passed, (x, s)
        assert verify_eq11(x, s, "float", cache_small).passed, (x, s)


@pytest.mark.parametrize("s", [0.5, 1.0, 2.0])
def test_square_identities_float(cache_square, s):
    for x in (30, 150, 400):
        assert verify_eq5(x, s, "float", cache_square).passed, (x, s)
        assert verify_eq15(x, s, "float", cache_square).passed, (x, s)


@pytest.mark.parametrize("s", [0.5, 1.0, 2.0])
def test_tail_double_sums_float(cache_small, s):
    for x in (5, 25, 60):
        assert verify_eq3(x, s, "float", cache_small).passed, (x, s)
        assert verify_eq13(x, s, "float", cache_small).passed, (x, s)


def test_fraction_form_float_beyond_rational_bound(cache_square):
    r = verify_eq18(300, "auto", cache_square)
    assert r.kind == "float" and r.passed


def test_float_residuals_are_tiny(cache_square):
    # Residuals should sit many orders below the default tolerance.
    worst = max(abs(verify_eq7(x, "float", cache_square).float_value)
                for x in (100, 500, 1000))
    assert worst < 1e-12


def test_tolerance_is_respected(cache_small):
    r = verify_eq7(50, "float", cache_small, tolerance=1e-30)
    assert r.tolerance == 1e-30
    r = verify_eq7(50, "float", cache_small, tolerance=10.0)
    assert r.passed


# --- mode resolution ----------------------------------------------------------

def test_auto_mode_picks_exact_within_bounds(cache_small):
    assert verify_eq7(60, "auto", cache_small).kind == "exact"
    assert verify_eq7(61, "auto", cache_small).kind == "float"
    assert verify_eq18(200, "auto", cache_small).kind == "exact"
    assert verify_eq18(201, "auto", cache_small).kind == "float"
    assert verify_eq1(200, 1.0, "auto", cache_small).kind == "exact"
    assert verify_eq1(201, 1.0, "auto", cache_small).kind == "float"


def test_exact_mode_bound_errors(cache_small):
    with pytest.raises(RationalBoundError):
        verify_eq7(61, "exact", cache_small)
    with pytest.raises(RationalBoundError):
        verify_eq1(201, 1.0, "exact", cache_small)
    with pytest.raises(ExactModeError):
        verify_eq1(10, 0.5, "exact", cache_small)
    with pytest.raises(ValueError):
        verify_eq3(61, 1.0, "float", cache_small)


@given(st.integers(min_value=1, max_value=300))
@settings(max_examples=60, deadline=None)
def test_eq1_closure_property_random_x(x):
    cache = SequenceCache(300)
    assert verify_eq1(x, 0.0, "exact", cache).exact_value == 0


def test_dispatcher_covers_catalogue(cache_small):
    for ident in Identity:
        x = 6
        j = 20 if ident in (Identity.EQ2, Identity.EQ12) else None
        s = {Identity.EQ6: 0.0, Identity.EQ17: 0.0}.get(ident, 1.0)
        case = IdentityCase(ident, x, j, s, "auto")
        res = verify_case(case, cache_small)
        assert res.passed, ident
