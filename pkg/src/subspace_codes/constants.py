"""The constants K_q and theta(q), each by independent truncated series.

K_q = prod_{j>=1} (1 - q^-j) is computed three ways:

* ``euler_product``: the product itself.  Since prod(1 - a_j) >= 1 - sum a_j,
  the tail lies in [1 - q^-J/(q-1), 1].
* ``pentagonal``: 1 + sum_{k>=1} (-1)^k (q^{-k(3k-1)/2} + q^{-k(3k+1)/2}); the
  omitted terms are bounded by 2 q^{-e} q/(q-1) with e the first omitted
  pentagonal exponent.
* ``partition_series``: K_q^{-1} = sum_k p(k) q^-k, with p(k) from a
  coin-change recurrence that never uses the pentagonal identity.  The tail
  uses p(k) < exp(pi sqrt(2k/3)) and a geometric ratio bound.

theta(x) = sum_{n>=0} x^{-n^2} for real x > 1; the tail after N is at most
x^{-(N+1)^2} / (1 - x^{-(2N+3)}).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import iv, mp, mpf

from . import intervals as ivl
from .errors import OutOfRange, PrecisionUnsupported

MAX_PRECISION = 100
KQ_METHODS = ("euler_product", "pentagonal", "partition_series")


@dataclass(frozen=True)
class ConstantEstimate:
    """A certified enclosure [value - error_bound, value + error_bound]."""

    value: mpf
    method: str
    truncation_index: int
    error_bound: mpf
    lower: Fraction
    upper: Fraction

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    def enclosure(self):
        return iv.mpf([ivl.interval(self.lower).a, ivl.interval(self.upper).b])


def _check_precision(precision: int) -> int:
    if not 1 <= precision <= MAX_PRECISION:
        raise PrecisionUnsupported(f"precision must be 1..{MAX_PRECISION} digits")
    return precision + 15


def _estimate(enc, method: str, index: int) -> ConstantEstimate:
    lo, hi = ivl.endpoints(enc)
    mid, rad = (lo + hi) / 2, (hi - lo) / 2
    with mp.workdps(iv.dps):
        value = mpf(mid.numerator) / mid.denominator
        error = mpf(rad.numerator) / rad.denominator
    return ConstantEstimate(value, method, index, error, lo, hi)


def _digits_to_terms(q: int, digits: int) -> int:
    """Smallest J with q^-J below 10^-digits."""
    return math.ceil(digits * math.log(10) / math.log(q)) + 2


def _euler(q: int, J: int):
    iq = 1 / ivl.interval(q)
    prod = ivl.interval(1)
    power = ivl.interval(1)
    for _ in range(J):
        power = power * iq
        prod = prod * (1 - power)
    tail = power / (q - 1)
    return prod * iv.mpf([1 - tail.b, 1])


def _pentagonal(q: int, N: int):
    iq = 1 / ivl.interval(q)
    total = ivl.interval(1)
    for k in range(1, N + 1):
        term = iq ** (k * (3 * k - 1) // 2) + iq ** (k * (3 * k + 1) // 2)
        total = total + term if k % 2 == 0 else total - term
    e = (N + 1) * (3 * (N + 1) - 1) // 2
    tail = 2 * iq**e * q / (q - 1)
    return total + iv.mpf([-tail.b, tail.b])


@lru_cache(maxsize=None)
def partition_numbers(N: int) -> tuple[int, ...]:
    """p(0..N) by counting multisets of parts (no pentagonal recurrence)."""
    p = [1] + [0] * N
    for part in range(1, N + 1):
        for k in range(part, N + 1):
            p[k] += p[k - part]
    return tuple(p)


def _partition_terms(q: int, digits: int) -> int:
    N = _digits_to_terms(q, digits)
    while True:
        ratio = math.exp(math.pi / math.sqrt(6 * (N + 1))) / q
        if ratio < 0.9:
            head = math.pi * math.sqrt(2 * (N + 1) / 3) - (N + 1) * math.log(q)
            if head - math.log(1 - ratio) < -digits * math.log(10) - 5:
                return N
        N += 8


def _partition_inverse(q: int, N: int):
    p = partition_numbers(N)
    iq = 1 / ivl.interval(q)
    total = ivl.interval(0)
    power = ivl.interval(1)
    for k in range(N + 1):
        total = total + p[k] * power
        power = power * iq
    k1 = N + 1
    head = iv.exp(iv.pi * iv.sqrt(ivl.interval(Fraction(2 * k1, 3)))) * power
    ratio = iv.exp(iv.pi / iv.sqrt(ivl.interval(6 * k1))) * iq
    if not ivl.certainly_lt(ratio, 1):
        raise OutOfRange("partition tail bound needs more terms")
    tail = head / (1 - ratio)
    return total + iv.mpf([0, tail.b])


def kq_constant(q: int, precision: int = 50, method: str = "euler_product") -> ConstantEstimate:
    """K_q to ``precision`` significant digits by the chosen series."""
    if q < 2:
        raise OutOfRange("K_q needs q >= 2")
    dps = _check_precision(precision)
    target = precision + 5
    with ivl.precision(dps):
        if method == "euler_product":
            J = _digits_to_terms(q, target)
            return _estimate(_euler(q, J), method, J)
        if method == "pentagonal":
            N = 1
            while (N + 1) * (3 * N + 2) // 2 * math.log10(q) < target + 2:
                N += 1
            return _estimate(_pentagonal(q, N), method, N)
        if method == "partition_series":
            N = _partition_terms(q, target)
            return _estimate(1 / _partition_inverse(q, N), method, N)
    raise ValueError(f"unknown method {method!r}")


def kq_inverse_partition(q: int, precision: int = 50) -> ConstantEstimate:
    """K_q^{-1} directly as the partition generating series."""
    dps = _check_precision(precision)
    with ivl.precision(dps):
        N = _partition_terms(q, precision + 5)
        return _estimate(_partition_inverse(q, N), "partition_series", N)


def _theta_terms(x: float, digits: int) -> int:
    N = 0
    while (N + 1) ** 2 * math.log10(x) < digits + 2:
        N += 1
    return N


def theta_interval(x, digits: int = 50):
    """Certified enclosure of theta(x) for an interval/exact x > 1."""
    xi = ivl.interval(x)
    if not ivl.certainly_lt(1, xi):
        raise OutOfRange("theta needs base > 1")
    N = _theta_terms(float(ivl.lower(xi)), digits)
    ix = 1 / xi
    total = ivl.interval(0)
    for n in range(N + 1):
        total = total + ix ** (n * n)
    tail = ix ** ((N + 1) ** 2) / (1 - ix ** (2 * N + 3))
    return total + iv.mpf([0, tail.b]), N, tail


def theta_constant(q, precision: int = 50) -> ConstantEstimate:
    """theta(q) = sum_{n>=0} q^{-n^2}; ``q`` may be any real base > 1."""
    dps = _check_precision(precision)
    with ivl.precision(dps):
        enc, N, _ = theta_interval(q, precision + 5)
        return _estimate(enc, "theta_series", N)


def theta_tail_bound(x, N: int):
    """Rigorous bound on sum_{n>N} x^{-n^2}; never more than 2 x^{-(N+1)^2}."""
    ix = 1 / ivl.interval(x)
    return ix ** ((N + 1) ** 2) / (1 - ix ** (2 * N + 3))


def kq_interval(q: int, digits: int = 50):
    """Enclosure of K_q for use inside other certified bounds."""
    return _euler(q, _digits_to_terms(q, digits + 5))
