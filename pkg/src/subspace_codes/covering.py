"""Bounds on K_S(q, n, rho) and K_I(q, n, rho), the smallest covering codes.

Lower bounds: the sphere-covering program over dimension profiles (LP
relaxation, optionally solved exactly as an ILP), a plain counting bound,
and a packing argument.  Upper bounds: the per-Grassmannian greedy bound,
the whole-space greedy bound and the union of whole Grassmannians.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from mpmath import iv

from . import intervals as ivl
from .errors import NodeBudgetExceeded, OutOfRange
from .lp import DEFAULT_NODE_BUDGET, LinearProgram, solve_ilp, solve_lp
from .packing import injection_packing_bounds, subspace_packing_bounds
from .qcomb import ball_volume, distance_count, gaussian_binomial, projective_space_size

SPHERE_LP = "sphere-covering-lp"
SPHERE_ILP = "sphere-covering-ilp"
COUNTING = "ball-counting"
PACKING = "packing-argument"
GREEDY_LAYERS = "greedy-per-grassmannian"
GREEDY_WHOLE = "greedy-whole-space"
UNION = "grassmannian-union"
RELATION = "metric-relation"
EXACT = "exact-boundary-case"
UNION_CDC_NOTE = "union-of-cdc-covers-not-evaluated"


def _check(q: int, n: int, rho: int) -> None:
    if n < 1 or not 0 <= rho <= n:
        raise OutOfRange(f"need 0 <= rho <= n, got rho={rho}, n={n}")


def _check_interior(n: int, rho: int) -> None:
    if not 0 < rho < n // 2:
        raise OutOfRange(f"need 0 < rho < {n // 2}, got {rho}")


def covering_boundary_cases(q: int, n: int, rho: int, metric: str) -> int | None:
    """Exact K where it is pinned down, else None."""
    _check(q, n, rho)
    half = n // 2
    if rho == 0:
        return projective_space_size(q, n)
    if metric == "subspace":
        if rho == n:
            return 1
        if rho >= half:
            return 2
        return None
    if metric == "injection":
        if rho >= n - half:
            return 1
        if n % 2 == 1 and rho == half:
            return 2
        return None
    raise ValueError(f"unknown metric {metric!r}")


def sphere_covering_program(q: int, n: int, rho: int, metric: str) -> LinearProgram:
    """min sum A_i  s.t.  sum_i A_i * (# r-spaces within rho of an i-space) >= [n r]."""
    coverage = [
        [sum(distance_count(q, n, i, r, d, metric) for d in range(rho + 1)) for i in range(n + 1)]
        for r in range(n + 1)
    ]
    b = [gaussian_binomial(q, n, r) for r in range(n + 1)]
    return LinearProgram(c=[1] * (n + 1), A=coverage, b=b, upper=list(b))


@dataclass
class CoveringBoundReport:
    q: int
    n: int
    rho: int
    metric: str
    lower: int
    upper: int
    lp_value: Fraction | None = None
    ilp_value: int | None = None
    lower_provenance: tuple[str, ...] = ()
    upper_provenance: tuple[str, ...] = ()
    components: dict = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.lower > self.upper:
            raise AssertionError(f"empty covering interval [{self.lower}, {self.upper}]")
        if self.lp_value is not None and self.ilp_value is not None:
            if math.ceil(self.lp_value) > self.ilp_value:
                raise AssertionError("ILP optimum below the LP ceiling")

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "rho": self.rho,
            "metric": self.metric,
            "lower": self.lower,
            "upper": self.upper,
            "lp_value": None if self.lp_value is None else str(self.lp_value),
            "ilp_value": self.ilp_value,
            "lower_provenance": list(self.lower_provenance),
            "upper_provenance": list(self.upper_provenance),
            "components": dict(self.components),
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d: dict) -> CoveringBoundReport:
        return cls(
            q=d["q"],
            n=d["n"],
            rho=d["rho"],
            metric=d["metric"],
            lower=d["lower"],
            upper=d["upper"],
            lp_value=None if d["lp_value"] is None else Fraction(d["lp_value"]),
            ilp_value=d["ilp_value"],
            lower_provenance=tuple(d["lower_provenance"]),
            upper_provenance=tuple(d["upper_provenance"]),
            components=dict(d["components"]),
            notes=tuple(d["notes"]),
        )


def sphere_covering_lower(
    q: int,
    n: int,
    rho: int,
    metric: str,
    mode: str = "lp",
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> CoveringBoundReport:
    """Sphere-covering lower bound; ``mode='ilp'`` also solves the integer program.

    When the node budget runs out the LP ceiling is still reported and the
    exhausted search is recorded in ``notes``.
    """
    _check_interior(n, rho)
    program = sphere_covering_program(q, n, rho, metric)
    lp = solve_lp(program)
    lower = math.ceil(lp.optimum)
    tags = [SPHERE_LP]
    ilp_value, notes = None, []
    if mode == "ilp":
        try:
            res = solve_ilp(program, node_budget)
            ilp_value = int(res.optimum)
            if ilp_value > lower:
                lower, tags = ilp_value, [SPHERE_ILP]
            else:
                tags.append(SPHERE_ILP)
        except NodeBudgetExceeded as exc:
            notes.append(f"ilp node budget exhausted after {exc.nodes} nodes")
            lower = max(lower, int(exc.best_bound))
    elif mode != "lp":
        raise ValueError(f"unknown mode {mode!r}")
    total = projective_space_size(q, n)
    return CoveringBoundReport(
        q, n, rho, metric, lower, total, lp.optimum, ilp_value,
        tuple(tags), ("whole-space",), {SPHERE_LP: str(lp.optimum)}, tuple(notes),
    )


def counting_lower(q: int, n: int, rho: int, metric: str) -> int:
    """ceil(|E| / largest ball volume)."""
    vmax = max(ball_volume(q, n, r, rho, metric) for r in range(n + 1))
    return -(-projective_space_size(q, n) // vmax)


def packing_argument_lower(q: int, n: int, rho: int, metric: str) -> int:
    """Any code with minimum distance 2 rho + 1 needs a distinct center per codeword."""
    # a ball of radius rho holds at most one codeword of such a packing; for the
    # subspace metric this includes the half-dimension lifted MRD code with
    # injection distance rho + 1
    if rho == 0:
        return projective_space_size(q, n)
    d = 2 * rho + 1
    if d > n:
        return 1
    bounds = subspace_packing_bounds if metric == "subspace" else injection_packing_bounds
    return bounds(q, n, d).lower


def _greedy_layer_terms(q: int, n: int, rho: int):
    """Certified enclosures of k_r for r = rho+1 .. n//2."""
    out = []
    for r in range(rho + 1, n // 2 + 1):
        a = gaussian_binomial(q, n - r + rho, rho)
        k = ivl.interval(Fraction(gaussian_binomial(q, n, r), a)) + ivl.interval(
            Fraction(gaussian_binomial(q, n, r - rho), gaussian_binomial(q, r, rho))
        ) * iv.log(ivl.interval(a))
        out.append((r, k))
    return out


def greedy_upper_subspace(q: int, n: int, rho: int, digits: int = 40) -> int:
    """2 + 2 * sum_r floor(k_r), floors taken on certified upper endpoints."""
    _check_interior(n, rho)
    with ivl.precision(digits):
        return 2 + 2 * sum(ivl.floor_upper(k) for _, k in _greedy_layer_terms(q, n, rho))


def greedy_layer_counts(q: int, n: int, rho: int, digits: int = 40) -> dict[int, int]:
    """floor(k_r) per target dimension r (upper endpoints)."""
    _check_interior(n, rho)
    with ivl.precision(digits):
        return {r: ivl.floor_upper(k) for r, k in _greedy_layer_terms(q, n, rho)}


def greedy_upper_injection(q: int, n: int, rho: int, digits: int = 40) -> int:
    """ceil(|E| / min_r V_I(r, rho) * (1 + ln max_r V_I(r, rho)))."""
    _check_interior(n, rho)
    vols = [ball_volume(q, n, r, rho, "injection") for r in range(n + 1)]
    with ivl.precision(digits):
        value = ivl.interval(Fraction(projective_space_size(q, n), min(vols))) * (
            1 + iv.log(ivl.interval(max(vols)))
        )
        return ivl.ceil_upper(value)


def union_grassmannian_dims(n: int, rho: int) -> tuple[list[int], list[int]]:
    _check_interior(n, rho)
    top = n // 2 - rho
    j1 = sorted({0} | {top - k * (2 * rho + 1) for k in range(top // (2 * rho + 1) + 1)})
    j2 = sorted(n - j for j in j1)
    return j1, j2


def union_grassmannian_upper(q: int, n: int, rho: int) -> tuple[int, list[int], list[int]]:
    j1, j2 = union_grassmannian_dims(n, rho)
    return sum(gaussian_binomial(q, n, r) for r in set(j1) | set(j2)), j1, j2


def _pick(candidates: dict[str, int], pick) -> tuple[int, tuple[str, ...]]:
    value = pick(candidates.values())
    return value, tuple(k for k, v in candidates.items() if v == value)


def covering_bounds(
    q: int,
    n: int,
    rho: int,
    metric: str,
    ilp: bool = False,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> CoveringBoundReport:
    """Best available interval for K_S or K_I at (q, n, rho)."""
    exact = covering_boundary_cases(q, n, rho, metric)
    if exact is not None:
        return CoveringBoundReport(
            q, n, rho, metric, exact, exact, None, None, (EXACT,), (EXACT,), {EXACT: exact}
        )
    if metric not in ("subspace", "injection"):
        raise ValueError(f"unknown metric {metric!r}")
    notes: list[str] = []
    lowers: dict[str, int] = {}
    uppers: dict[str, int] = {}
    lp_value = ilp_value = None
    if 0 < rho < n // 2:
        sphere = sphere_covering_lower(q, n, rho, metric, "ilp" if ilp else "lp", node_budget)
        lp_value, ilp_value = sphere.lp_value, sphere.ilp_value
        lowers[sphere.lower_provenance[0]] = sphere.lower
        notes.extend(sphere.notes)
    lowers[COUNTING] = counting_lower(q, n, rho, metric)
    lowers[PACKING] = packing_argument_lower(q, n, rho, metric)
    uppers["whole-space"] = projective_space_size(q, n)
    if metric == "subspace":
        uppers[GREEDY_LAYERS] = greedy_upper_subspace(q, n, rho)
        uppers[UNION] = union_grassmannian_upper(q, n, rho)[0]
    else:
        if 0 < rho < n // 2:
            uppers[GREEDY_WHOLE] = greedy_upper_injection(q, n, rho)
        # injection radius never exceeds subspace radius
        sub_upper = (
            covering_bounds(q, n, rho, "subspace").upper if rho < n // 2 else 2
        )
        uppers[RELATION] = sub_upper
        # subspace distance is at most twice the injection distance
        rho2 = 2 * rho
        if 0 < rho2 < n // 2:
            lowers[RELATION] = max(
                math.ceil(solve_lp(sphere_covering_program(q, n, rho2, "subspace")).optimum),
                counting_lower(q, n, rho2, "subspace"),
                packing_argument_lower(q, n, rho2, "subspace"),
            )
        notes.append(UNION_CDC_NOTE)
    lower, ltags = _pick(lowers, max)
    upper, utags = _pick(uppers, min)
    comps = {k: v for k, v in lowers.items()}
    comps.update({k: v for k, v in uppers.items()})
    if lp_value is not None:
        comps["lp_value"] = str(lp_value)
    return CoveringBoundReport(
        q, n, rho, metric, lower, upper, lp_value, ilp_value, ltags, utags, comps, tuple(notes)
    )
