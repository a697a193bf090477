"""Certified sandwiches around the exact counts.

Each check pits an exact integer (a Gaussian binomial, |E(q, n)| or a ball
volume) against real-valued bounds built from powers of q, K_q and theta.
The real side is an outward-rounded interval, so ``holds`` is only True when
the inequality is proven at the working precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import intervals as ivl
from .constants import kq_interval, theta_interval
from .qcomb import ball_volume, g_exponent, gaussian_binomial, projective_space_size

DEFAULT_DIGITS = 40


@dataclass(frozen=True)
class Sandwich:
    name: str
    params: tuple
    value: int
    lower: Fraction  # certified upper endpoint of the lower bound
    upper: Fraction  # certified lower endpoint of the upper bound
    strict_upper: bool

    @property
    def lower_ok(self) -> bool:
        return self.lower <= self.value

    @property
    def upper_ok(self) -> bool:
        return self.value < self.upper if self.strict_upper else self.value <= self.upper

    @property
    def holds(self) -> bool:
        return self.lower_ok and self.upper_ok


@lru_cache(maxsize=None)
def _consts(q: int, digits: int):
    with ivl.precision(digits + 10):
        kq = kq_interval(q, digits + 5)
        th = theta_interval(q, digits + 5)[0]
        th3 = theta_interval(q**3, digits + 5)[0]
        th34 = theta_interval(ivl.qpow(q, Fraction(3, 4)), digits + 5)[0]
    return kq, th, th3, th34


def _make(name, params, value, lo, hi, strict) -> Sandwich:
    return Sandwich(name, params, value, ivl.upper(lo), ivl.lower(hi), strict)


def gaussian_sandwich(q: int, n: int, r: int, digits: int = DEFAULT_DIGITS) -> Sandwich:
    """q^{r(n-r)} <= [n r] < K_q^{-1} q^{r(n-r)}."""
    kq, *_ = _consts(q, digits)
    e = r * (n - r)
    with ivl.precision(digits + 10):
        hi = ivl.interval(q**e) / kq
    return _make("gaussian", (q, n, r), gaussian_binomial(q, n, r), q**e, hi, True)


def projective_sandwich(q: int, n: int, digits: int = DEFAULT_DIGITS) -> Sandwich:
    """q^{h(n-h)} <= |E(q, n)| < 2 K_q^{-1} theta(q) q^{h(n-h)}, h = n // 2."""
    kq, th, _, _ = _consts(q, digits)
    h = n // 2
    e = h * (n - h)
    with ivl.precision(digits + 10):
        hi = 2 * th * ivl.interval(q**e) / kq
    return _make("projective", (q, n), projective_space_size(q, n), q**e, hi, True)


def subspace_ball_sandwich(q: int, n: int, r: int, t: int, digits: int = DEFAULT_DIGITS) -> Sandwich:
    """q^{g - 3/4} <= V_S(r, t) <= 2 theta(q^3) K_q^-2 (1 + q^{-4/3}) theta(q^{3/4}) q^g."""
    kq, _, th3, th34 = _consts(q, digits)
    g = g_exponent(n, r, t)
    with ivl.precision(digits + 10):
        lo = ivl.qpow(q, g - Fraction(3, 4))
        hi = 2 * th3 / (kq * kq) * (1 + ivl.qpow(q, Fraction(-4, 3))) * th34 * ivl.qpow(q, g)
    return _make("subspace-ball", (q, n, r, t), ball_volume(q, n, r, t, "subspace"), lo, hi, False)


def injection_ball_sandwich(q: int, n: int, r: int, t: int, digits: int = DEFAULT_DIGITS) -> Sandwich:
    """q^{t(n-t)} <= V_I(r, t) < theta(q) (2 theta(q) - 1) K_q^-2 q^{t(n-t)}."""
    kq, th, _, _ = _consts(q, digits)
    e = t * (n - t)
    with ivl.precision(digits + 10):
        hi = th * (2 * th - 1) / (kq * kq) * ivl.interval(q**e)
    return _make("injection-ball", (q, n, r, t), ball_volume(q, n, r, t, "injection"), q**e, hi, True)


def sandwich_grid(qs=(2, 3, 4, 5), n_max: int = 14, digits: int = DEFAULT_DIGITS):
    """Every volume sandwich on the grid: V_S for r, t <= n//2; V_I for all r."""
    for q in qs:
        for n in range(1, n_max + 1):
            h = n // 2
            for t in range(h + 1):
                for r in range(h + 1):
                    yield subspace_ball_sandwich(q, n, r, t, digits)
                for r in range(n + 1):
                    yield injection_ball_sandwich(q, n, r, t, digits)


__all__ = [
    "Sandwich",
    "gaussian_sandwich",
    "injection_ball_sandwich",
    "projective_sandwich",
    "sandwich_grid",
    "subspace_ball_sandwich",
]
