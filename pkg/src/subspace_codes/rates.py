"""Finite-n rates log_q(bound) / log_q|E(q, n)| next to their limits.

Only closed-form bounds are used (no LP), so this stays cheap at n in the
hundreds.  Packing distances round up (d = ceil(n d')) and covering radii
round down (rho = floor(n rho')), matching the limits being approximated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .covering import (
    counting_lower,
    covering_boundary_cases,
    greedy_upper_injection,
    greedy_upper_subspace,
    packing_argument_lower,
)
from .packing import RateQuery, asymptotic_rate, cdc_bounds, log_rate, packing_bounds


@dataclass(frozen=True)
class RateReport:
    kind: str
    q: int
    n: int
    parameter: int
    lower: int
    upper: int
    lower_rate: float
    upper_rate: float
    limit: Fraction

    def gap(self) -> float:
        """Largest distance from either finite-n rate to the limit."""
        lim = float(self.limit)
        return max(abs(self.lower_rate - lim), abs(self.upper_rate - lim))

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "q": self.q,
            "n": self.n,
            "parameter": self.parameter,
            "lower": self.lower,
            "upper": self.upper,
            "lower_rate": self.lower_rate,
            "upper_rate": self.upper_rate,
            "limit": str(self.limit),
        }

    @classmethod
    def from_dict(cls, d: dict) -> RateReport:
        return cls(
            d["kind"], d["q"], d["n"], d["parameter"], d["lower"], d["upper"],
            d["lower_rate"], d["upper_rate"], Fraction(d["limit"]),
        )


def _covering_interval(q: int, n: int, rho: int, metric: str) -> tuple[int, int]:
    exact = covering_boundary_cases(q, n, rho, metric)
    if exact is not None:
        return exact, exact
    lower = max(counting_lower(q, n, rho, metric), packing_argument_lower(q, n, rho, metric))
    if metric == "subspace":
        return lower, greedy_upper_subspace(q, n, rho)
    return lower, greedy_upper_injection(q, n, rho)


def finite_rate(query: RateQuery, q: int, n: int) -> RateReport:
    k = query.kind
    if k in ("a_S", "a_I"):
        par = max(2, math.ceil(n * query.d))
        b = packing_bounds(q, n, par, "subspace" if k == "a_S" else "injection")
        lo, up = b.lower, b.upper
    elif k in ("a_S_cdc", "a_I_cdc"):
        r = math.floor(n * query.r)
        par = math.ceil(n * query.d / 2) if k == "a_S_cdc" else math.ceil(n * query.d)
        b = cdc_bounds(q, n, r, max(par, 1))
        lo, up = b.lower, b.upper
    else:
        par = math.floor(n * query.rho)
        lo, up = _covering_interval(q, n, par, "subspace" if k == "k_S" else "injection")
    return RateReport(
        k, q, n, par, lo, up, log_rate(lo, q, n), log_rate(up, q, n), asymptotic_rate(query)
    )
