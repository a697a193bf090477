from __future__ import annotations

import json
import math

import numpy as np
import pytest

from subspace_codes.covering import (
    UNION_CDC_NOTE,
    CoveringBoundReport,
    counting_lower,
    covering_boundary_cases,
    covering_bounds,
    greedy_layer_counts,
    greedy_upper_injection,
    greedy_upper_subspace,
    packing_argument_lower,
    sphere_covering_lower,
    sphere_covering_program,
    union_grassmannian_dims,
    union_grassmannian_upper,
)
from subspace_codes.errors import NodeBudgetExceeded, OutOfRange
from subspace_codes.field import gf
from subspace_codes.lp import solve_lp
from subspace_codes.oracle import vector_index
from subspace_codes.qcomb import ball_volume, gaussian_binomial, projective_space_size
from subspace_codes.subspace import AmbientSpace

METRICS = ("subspace", "injection")


def test_boundary_examples():
    assert covering_boundary_cases(2, 6, 3, "subspace") == 2
    assert covering_boundary_cases(2, 6, 3, "injection") == 1
    assert covering_boundary_cases(2, 5, 2, "injection") == 2
    assert covering_boundary_cases(2, 6, 6, "subspace") == 1
    assert covering_boundary_cases(2, 6, 0, "subspace") == projective_space_size(2, 6)
    assert covering_boundary_cases(2, 6, 1, "subspace") is None
    assert covering_boundary_cases(2, 6, 2, "injection") is None
    with pytest.raises(OutOfRange):
        covering_boundary_cases(2, 6, 7, "subspace")
    with pytest.raises(OutOfRange):
        covering_boundary_cases(2, 6, -1, "injection")


def test_interior_operations_reject_boundary():
    for fn in (greedy_upper_subspace, greedy_upper_injection, union_grassmannian_upper):
        with pytest.raises(OutOfRange):
            fn(2, 6, 3)
        with pytest.raises(OutOfRange):
            fn(2, 6, 0)
    with pytest.raises(OutOfRange):
        sphere_covering_lower(2, 6, 3, "subspace")


def test_union_dims():
    assert union_grassmannian_dims(6, 1) == ([0, 2], [4, 6])
    assert union_grassmannian_dims(10, 2) == ([0, 3], [7, 10])
    assert union_grassmannian_upper(2, 6, 1) == (1304, [0, 2], [4, 6])
    # k runs past 0 when the progression fits twice
    j1, _ = union_grassmannian_dims(14, 1)
    assert j1 == [0, 3, 6]


def test_radius_zero_cover_is_feasible():
    for metric in METRICS:
        prog = sphere_covering_program(2, 4, 1, metric)
        assert prog.is_feasible([gaussian_binomial(2, 4, i) for i in range(5)])
        assert solve_lp(prog).optimum <= 67


def _exact_min_cover(q, n, rho, metric):
    milp = pytest.importorskip("scipy.optimize").milp
    from scipy.optimize import LinearConstraint

    idx = vector_index(AmbientSpace(gf(q), n))
    cover = np.stack([idx.distance_row(s, metric) <= rho for s in idx.subspaces]).astype(float)
    m = cover.shape[0]
    res = milp(np.ones(m), constraints=LinearConstraint(cover.T, lb=1), integrality=np.ones(m),
               bounds=(0, 1))
    assert res.success
    return round(res.fun)


@pytest.mark.parametrize("metric", METRICS)
def test_ilp_against_exact_set_cover(metric):
    rep = sphere_covering_lower(2, 4, 1, metric, "ilp")
    exact = _exact_min_cover(2, 4, 1, metric)
    assert 2 <= rep.ilp_value <= exact
    assert math.ceil(rep.lp_value) <= rep.ilp_value
    assert rep.lower <= exact


def test_lp_mode_has_no_ilp():
    rep = sphere_covering_lower(2, 6, 1, "subspace")
    assert rep.ilp_value is None
    assert rep.lower == math.ceil(rep.lp_value)


def test_node_budget_falls_back_to_lp():
    rep = sphere_covering_lower(3, 8, 2, "injection", "ilp", node_budget=1)
    # either the root was integral or the budget was recorded
    assert rep.ilp_value is not None or any("budget" in n for n in rep.notes)
    assert rep.lower >= math.ceil(rep.lp_value)


def test_2_6_1_intervals():
    s = covering_bounds(2, 6, 1, "subspace", ilp=True)
    i = covering_bounds(2, 6, 1, "injection", ilp=True)
    assert s.upper <= 1304 and s.upper <= greedy_upper_subspace(2, 6, 1)
    assert s.lower <= s.upper and i.lower <= i.upper
    assert i.upper <= s.upper
    assert UNION_CDC_NOTE in i.notes
    assert i.lower == 27 and i.upper == 253


def test_greedy_layer_counts_sum():
    counts = greedy_layer_counts(2, 8, 1)
    assert sorted(counts) == [2, 3, 4]
    assert greedy_upper_subspace(2, 8, 1) == 2 + 2 * sum(counts.values())


@pytest.mark.parametrize("n", range(4, 15))
def test_greedy_subspace_asymptotic_form(n):
    mp = pytest.importorskip("mpmath")
    mp.mp.dps = 40
    kq = mp.qp(mp.mpf(1) / 2)
    h = n // 2
    for rho in range(1, h):
        form = 2 + (n + 1) * (1 - mp.log(kq) + rho * (n - rho - 1) * mp.log(2)) / kq * mp.mpf(2) ** (
            (n - h) * (h - rho)
        )
        assert greedy_upper_subspace(2, n, rho) <= form


@pytest.mark.parametrize("n", range(4, 15))
def test_greedy_injection_ratio(n):
    mp = pytest.importorskip("mpmath")
    mp.mp.dps = 40
    kq = mp.qp(mp.mpf(1) / 2)
    th = mp.nsum(lambda k: mp.mpf(2) ** (-k * k), [0, mp.inf])
    h = n // 2
    for rho in range(1, h):
        ratio = mp.mpf(greedy_upper_injection(2, n, rho)) / mp.mpf(2) ** (h * (n - h) - rho * (n - rho))
        cap = 2 / kq * th * (1 + mp.log(th * (2 * th - 1) / kq**2) + rho * (n - rho) * mp.log(2))
        assert ratio <= cap


def _grid():
    for q in (2, 3):
        for n in range(1, 9):
            for rho in range(0, n + 1):
                for metric in METRICS:
                    yield q, n, rho, metric


def test_bounds_consistent_on_grid():
    reports = {}
    for q, n, rho, metric in _grid():
        rep = covering_bounds(q, n, rho, metric)
        assert rep.lower <= rep.upper
        reports[q, n, rho, metric] = rep
    for (q, n, rho, metric), rep in reports.items():
        if rho + 1 <= n:
            # larger radius never needs more codewords
            nxt = reports[q, n, rho + 1, metric]
            assert nxt.lower <= rep.upper
        if metric == "injection":
            sub = reports[q, n, rho, "subspace"]
            assert rep.upper <= sub.upper
            if 2 * rho <= n:
                assert reports[q, n, 2 * rho, "subspace"].lower <= rep.upper


def test_lower_bounds_monotone_in_radius():
    for q in (2, 3):
        for n in range(2, 9):
            for metric in METRICS:
                lows = [covering_bounds(q, n, rho, metric).lower for rho in range(n + 1)]
                assert all(a >= b for a, b in zip(lows, lows[1:])), (q, n, metric, lows)


def test_counting_and_packing_lowers_are_sound():
    for n in range(2, 7):
        total = projective_space_size(2, n)
        for rho in range(n + 1):
            for metric in METRICS:
                vmax = max(ball_volume(2, n, r, rho, metric) for r in range(n + 1))
                assert counting_lower(2, n, rho, metric) * vmax >= total
                assert packing_argument_lower(2, n, rho, metric) >= 1


def test_ilp_at_least_lp_ceiling():
    for q in (2, 3):
        for n in range(4, 9):
            for rho in range(1, n // 2):
                for metric in METRICS:
                    rep = sphere_covering_lower(q, n, rho, metric, "ilp")
                    assert rep.ilp_value >= math.ceil(rep.lp_value)


def test_report_round_trip():
    rep = covering_bounds(2, 6, 1, "injection", ilp=True)
    back = CoveringBoundReport.from_dict(json.loads(json.dumps(rep.to_dict())))
    assert back == rep
    with pytest.raises(AssertionError):
        CoveringBoundReport(2, 6, 1, "subspace", 5, 4)
