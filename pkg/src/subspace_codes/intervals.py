"""Certified real arithmetic on top of ``mpmath.iv`` (outward rounding).

Bounds that involve K_q, theta(q), logarithms or fractional powers of q are
evaluated as intervals guaranteed to contain the true value.  Comparisons
against exact integers go through the rational endpoints, so a ``True``
from :func:`certainly_le` is a proof, never a floating-point guess.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from fractions import Fraction
from typing import Union

from mpmath import iv
from mpmath.libmp import to_rational

DEFAULT_DPS = 60

Exact = Union[int, Fraction]


@contextmanager
def precision(dps: int):
    old = iv.prec
    iv.dps = dps
    try:
        yield
    finally:
        iv.prec = old


def interval(x) -> "iv.mpf":
    """Enclosure of an int, Fraction or existing interval."""
    if isinstance(x, Fraction):
        return iv.mpf(x.numerator) / x.denominator
    return iv.mpf(x)


def endpoints(x) -> tuple[Fraction, Fraction]:
    """Exact rational endpoints of an interval (or an exact number twice)."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x), Fraction(x)
    lo, hi = x._mpi_
    return Fraction(*map(int, to_rational(lo))), Fraction(*map(int, to_rational(hi)))


def lower(x) -> Fraction:
    return endpoints(x)[0]


def upper(x) -> Fraction:
    return endpoints(x)[1]


def certainly_le(a, b) -> bool:
    return upper(a) <= lower(b)


def certainly_lt(a, b) -> bool:
    return upper(a) < lower(b)


def floor_upper(x) -> int:
    """Floor of the upper endpoint: a safe integer ceiling-side bound."""
    return math.floor(upper(x))


def ceil_upper(x) -> int:
    return math.ceil(upper(x))


def ceil_lower(x) -> int:
    return math.ceil(lower(x))


def qpow(q, exponent) -> "iv.mpf":
    """Enclosure of q**exponent for rational exponent."""
    e = Fraction(exponent)
    base = interval(q)
    if e.denominator == 1:
        if isinstance(q, int):
            return interval(Fraction(q) ** e.numerator)
        return base ** int(e.numerator)
    return iv.exp(iv.log(base) * interval(e))
