"""Bounds on the maximum size of subspace codes with a given minimum distance.

A_C(q, n, r, d) is the largest constant-dimension code in E_r(q, n) with
minimum injection distance d; A_S and A_I are the general (mixed-dimension)
maxima in the subspace and injection metrics.  Every bound is an exact
integer; the comparison factors that involve K_q and theta(q) are certified
intervals.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import intervals as ivl
from .constants import kq_interval, theta_interval
from .errors import OutOfRange
from .qcomb import gaussian_binomial, projective_space_size

# provenance tags
CDC_ALL = "cdc-whole-grassmannian"
CDC_SINGLE = "cdc-single-codeword"
CDC_LIFTED = "cdc-lifted-mrd"
CDC_ANTICODE = "cdc-anticode-ratio"
HALF_DIM = "cdc-half-dimension"
LAYERED = "layered-union"
CDC_SUM = "cdc-sum"
TWO = "two-codeword"
SINGLETON = "singleton-puncturing"
RELATION = "subspace-relation"


@dataclass(frozen=True)
class BoundInterval:
    lower: int
    upper: int
    lower_provenance: tuple[str, ...]
    upper_provenance: tuple[str, ...]

    def __post_init__(self):
        if self.lower > self.upper:
            raise AssertionError(f"empty interval [{self.lower}, {self.upper}]")
        if not self.lower_provenance or not self.upper_provenance:
            raise AssertionError("provenance must be recorded on both sides")

    def __contains__(self, value: int) -> bool:
        return self.lower <= value <= self.upper

    def to_dict(self) -> dict:
        d = asdict(self)
        d["lower_provenance"] = list(self.lower_provenance)
        d["upper_provenance"] = list(self.upper_provenance)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> BoundInterval:
        return cls(
            int(d["lower"]),
            int(d["upper"]),
            tuple(d["lower_provenance"]),
            tuple(d["upper_provenance"]),
        )


def _best(candidates: list[tuple[int, str]], pick) -> tuple[int, tuple[str, ...]]:
    value = pick(v for v, _ in candidates)
    return value, tuple(tag for v, tag in candidates if v == value)


def cdc_bounds(q: int, n: int, r: int, d: int) -> BoundInterval:
    """Interval for A_C(q, n, r, d), injection distance d."""
    if not 0 <= r <= n:
        raise OutOfRange(f"dimension {r} outside 0..{n}")
    if d < 1:
        raise OutOfRange("minimum distance must be at least 1")
    r = min(r, n - r)
    if d == 1:
        g = gaussian_binomial(q, n, r)
        return BoundInterval(g, g, (CDC_ALL,), (CDC_ALL,))
    if d > r:
        return BoundInterval(1, 1, (CDC_SINGLE,), (CDC_SINGLE,))
    lower = q ** ((n - r) * (r - d + 1)) + 1
    upper = gaussian_binomial(q, n, r - d + 1) // gaussian_binomial(q, r, r - d + 1)
    return BoundInterval(lower, upper, (CDC_LIFTED,), (CDC_ANTICODE,))


def cdc_lower(q: int, n: int, r: int, d: int) -> int:
    return cdc_bounds(q, n, r, d).lower


def cdc_upper(q: int, n: int, r: int, d: int) -> int:
    return cdc_bounds(q, n, r, d).upper


def _layer_dims(n: int, d: int, inner: bool) -> list[int]:
    half = n // 2
    z = half // d
    span = range(-z + 1, z) if inner else range(-z, z + 1)
    return [half - i * d for i in span]


def layered_subspace_lower(q: int, n: int, d: int) -> int:
    """Sum of CDC lower bounds over the layers n//2 - i*d, |i| <= z."""
    delta = (d + 1) // 2
    return sum(cdc_lower(q, n, r, delta) for r in _layer_dims(n, d, False))


def layered_injection_lower(q: int, n: int, d: int) -> int:
    """2 + sum of CDC lower bounds over the layers n//2 - i*d, |i| < z."""
    return 2 + sum(cdc_lower(q, n, r, d) for r in _layer_dims(n, d, True))


def subspace_packing_bounds(q: int, n: int, d: int) -> BoundInterval:
    """Interval for A_S(q, n, d)."""
    if not 2 <= d <= n:
        raise OutOfRange(f"need 2 <= d <= n, got d={d}, n={n}")
    if n % 2 == 1 and d == n:
        return BoundInterval(2, 2, (TWO,), (TWO,))
    half, delta = n // 2, (d + 1) // 2
    lower, lower_tags = _best(
        [
            (cdc_lower(q, n, half, delta), HALF_DIM),
            (layered_subspace_lower(q, n, d), LAYERED),
        ],
        max,
    )
    upper = 2 + sum(cdc_upper(q, n, r, delta) for r in range(delta, n - delta + 1))
    return BoundInterval(lower, upper, lower_tags, (CDC_SUM,))


def singleton_upper(q: int, n: int, d: int) -> int:
    """|E(q, n-d+1)|: puncturing d-1 times keeps codewords distinct."""
    if not 2 <= d <= n // 2:
        raise OutOfRange(f"need 2 <= d <= {n // 2}, got {d}")
    return projective_space_size(q, n - d + 1)


def injection_packing_bounds(q: int, n: int, d: int) -> BoundInterval:
    """Interval for A_I(q, n, d)."""
    if not 2 <= d <= n:
        raise OutOfRange(f"need 2 <= d <= n, got d={d}, n={n}")
    half = n // 2
    if d > half:
        return BoundInterval(2, 2, (TWO,), (TWO,))
    lower, lower_tags = _best(
        [
            (cdc_lower(q, n, half, d), HALF_DIM),
            (layered_injection_lower(q, n, d), LAYERED),
            (subspace_packing_bounds(q, n, 2 * d - 1).lower, RELATION),
        ],
        max,
    )
    upper, upper_tags = _best(
        [
            (2 + sum(cdc_upper(q, n, r, d) for r in range(d, n - d + 1)), CDC_SUM),
            (singleton_upper(q, n, d), SINGLETON),
            (subspace_packing_bounds(q, n, d).upper, RELATION),
        ],
        min,
    )
    return BoundInterval(lower, upper, lower_tags, upper_tags)


def packing_bounds(q: int, n: int, d: int, metric: str) -> BoundInterval:
    if metric == "subspace":
        return subspace_packing_bounds(q, n, d)
    if metric == "injection":
        return injection_packing_bounds(q, n, d)
    raise ValueError(f"unknown metric {metric!r}")


def comparison_exponent(n: int, r: int, d: int, metric: str, stated: bool = False) -> int:
    """Exponent e of the q^e factor linking A_S (or A_I) to A_C at dimension r.

    The default is the exponent that the CDC bounds actually support,
    (n//2 - r)(ceil(n/2) - r + delta - 1) with delta = ceil(d/2) for the
    subspace metric and delta = d for the injection metric.  ``stated=True``
    gives the historical forms (n//2 - r)(n//2 - r + ceil(d/2) - 1) and
    (n//2 - r)(r - d + 1), which undershoot for odd n (subspace) and in
    general (injection); see the tests for explicit counterexamples.
    """
    half, top = n // 2, n - n // 2
    if metric == "subspace":
        delta = (d + 1) // 2
        if stated:
            return (half - r) * (half - r + delta - 1)
        return (half - r) * (top - r + delta - 1)
    if metric == "injection":
        if stated:
            return (half - r) * (r - d + 1)
        return (half - r) * (top - r + d - 1)
    raise ValueError(f"unknown metric {metric!r}")


def comparison_sandwich(q: int, n: int, r: int, d: int, metric: str, digits: int = 40,
                        stated: bool = False):
    """Scalar factors relating A_S (or A_I) to A_C at dimension r.

    Returns interval enclosures ``(lower_factor, upper_factor)`` such that
    lower_factor * A_C <= A <= upper_factor * A_C, where A_C is taken at
    distance ceil(d/2) for the subspace metric and d for the injection one.
    The lower factor carries K_q for the subspace metric and 1 for the
    injection metric; the upper factor is 2 theta(q) / K_q in both.
    """
    half = n // 2
    if metric == "subspace":
        if not (2 <= d <= 2 * half and (d + 1) // 2 <= r <= half):
            raise OutOfRange(f"need ceil(d/2) <= r <= {half} and 2 <= d <= {2 * half}")
    elif metric == "injection":
        if not 2 <= d <= r <= half:
            raise OutOfRange(f"need 2 <= d <= r <= {half}")
    e = comparison_exponent(n, r, d, metric, stated)
    with ivl.precision(digits + 10):
        kq = kq_interval(q, digits)
        th, _, _ = theta_interval(q, digits)
        qe = ivl.interval(q**e)
        lower = kq * qe if metric == "subspace" else qe
        return lower, 2 * th / kq * qe


# -- asymptotic rates ---------------------------------------------------------

RATE_KINDS = ("a_S", "a_S_cdc", "a_I", "a_I_cdc", "k_S", "k_I")


@dataclass(frozen=True)
class RateQuery:
    """Normalized arguments: d = d/n for packing, rho = rho/n for covering."""

    kind: str
    d: Fraction | None = None
    r: Fraction | None = None
    rho: Fraction | None = None

    def __post_init__(self):
        if self.kind not in RATE_KINDS:
            raise OutOfRange(f"unknown rate kind {self.kind!r}")
        needed = {
            "a_S": ("d",),
            "a_I": ("d",),
            "a_S_cdc": ("r", "d"),
            "a_I_cdc": ("r", "d"),
            "k_S": ("rho",),
            "k_I": ("rho",),
        }[self.kind]
        for name in needed:
            v = getattr(self, name)
            if v is None:
                raise OutOfRange(f"{self.kind} needs argument {name}")
            v = Fraction(v)
            if not 0 <= v <= 1:
                raise OutOfRange(f"{name}={v} outside [0, 1]")
            object.__setattr__(self, name, v)


def asymptotic_rate(query: RateQuery) -> Fraction:
    """Closed-form limit of log|code| / log|E(q, n)|."""
    k, d, r, rho = query.kind, query.d, query.r, query.rho
    half = Fraction(1, 2)
    if k == "a_S":
        return 1 - d
    if k == "a_I":
        return 1 - 2 * d if d <= half else Fraction(0)
    if k == "a_S_cdc":
        if r <= d / 2 or r >= 1 - d / 2:
            return Fraction(0)
        if r <= half:
            return 2 * (1 - r) * (2 * r - d)
        return 2 * r * (2 - 2 * r - d)
    if k == "a_I_cdc":
        if r <= d or r >= 1 - d:
            return Fraction(0)
        if r <= half:
            return 4 * (1 - r) * (r - d)
        return 4 * r * (1 - r - d)
    if k == "k_S":
        return 1 - 2 * rho if rho <= half else Fraction(0)
    return (1 - 2 * rho) ** 2 if rho <= half else Fraction(0)


def log_rate(value: int, q: int, n: int) -> float:
    """log_q(value) / log_q|E(q, n)| for an exact positive integer."""
    return math.log(value) / math.log(projective_space_size(q, n))
