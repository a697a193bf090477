from __future__ import annotations

from fractions import Fraction

import pytest
from mpmath import mp, mpf, nsum, inf

from subspace_codes.constants import (
    KQ_METHODS,
    kq_constant,
    kq_inverse_partition,
    partition_numbers,
    theta_constant,
    theta_interval,
    theta_tail_bound,
)
from subspace_codes import intervals as ivl
from subspace_codes.errors import PrecisionUnsupported


def test_partition_numbers_known_values():
    # p(0..15) from the standard table
    assert partition_numbers(15) == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176)
    assert partition_numbers(100)[100] == 190569292


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 9])
def test_three_series_agree(q):
    ests = [kq_constant(q, 50, m) for m in KQ_METHODS]
    for e in ests:
        assert e.upper - e.lower <= 2 * Fraction(1, 10**45)
    lo = max(e.lower for e in ests)
    hi = min(e.upper for e in ests)
    assert lo <= hi  # enclosures overlap
    mids = [e.midpoint for e in ests]
    assert max(mids) - min(mids) < Fraction(1, 10**30)
    inv = kq_inverse_partition(q, 50)
    assert abs(inv.midpoint * ests[0].midpoint - 1) < Fraction(1, 10**30)


def test_k2_value():
    est = kq_constant(2, 30)
    assert abs(est.midpoint - Fraction("0.288788095086602421278899721929")) < Fraction(1, 10**28)


def test_theta_values():
    est = theta_constant(2, 40)
    with mp.workdps(50):
        ref = nsum(lambda k: mpf(2) ** (-(k * k)), [0, inf])
        assert abs(est.value - ref) < mpf(10) ** -38
    assert abs(est.midpoint - Fraction("1.564468413605938")) < Fraction(1, 10**14)
    big = theta_constant(1024, 20)
    assert big.upper - 1 < Fraction(1, 2**9)


def test_theta_tail_bound_honoured():
    with ivl.precision(60):
        for x in (2, 3, Fraction(3, 2)):
            full, _, _ = theta_interval(x, 55)
            for N in range(0, 6):
                partial = sum((ivl.interval(Fraction(1)) / ivl.interval(x) ** (k * k) for k in range(N + 1)),
                              ivl.interval(0))
                tail = theta_tail_bound(x, N)
                assert ivl.certainly_le(full - partial, tail + ivl.interval(Fraction(1, 10**50)))
                assert ivl.upper(tail) <= 2 * Fraction(1) / Fraction(x) ** ((N + 1) ** 2)


def test_precision_guard():
    with pytest.raises(PrecisionUnsupported):
        kq_constant(2, 101)
    with pytest.raises(PrecisionUnsupported):
        theta_constant(2, 0)
    assert kq_constant(2, 100).error_bound < mpf(10) ** -99
