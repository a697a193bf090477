"""Exact rational linear programming and small branch-and-bound ILP.

Programs have the shape ``minimize c.x  subject to  A x >= b,  l <= x <= u``.
The simplex is a dense two-phase tableau over :class:`fractions.Fraction`
with Bland's rule, so it always terminates and is fully deterministic.
Every optimum comes with a dual vector that is checked against the primal
before being returned.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Sequence

from .errors import Infeasible, NodeBudgetExceeded, OutOfRange, Unbounded

MAX_ILP_VARIABLES = 64
DEFAULT_NODE_BUDGET = 10_000


def _frac_list(xs) -> list[Fraction]:
    return [Fraction(x) for x in xs]


@dataclass
class LinearProgram:
    c: list
    A: list
    b: list
    upper: list = None  # None entries mean no upper bound
    lower: list = None

    def __post_init__(self):
        nv = len(self.c)
        self.c = _frac_list(self.c)
        self.A = [_frac_list(row) for row in self.A]
        self.b = _frac_list(self.b)
        if len(self.A) != len(self.b) or any(len(row) != nv for row in self.A):
            raise OutOfRange("constraint matrix shape does not match c and b")
        if self.upper is None:
            self.upper = [None] * nv
        if self.lower is None:
            self.lower = [Fraction(0)] * nv
        self.upper = [None if u is None else Fraction(u) for u in self.upper]
        self.lower = _frac_list(self.lower)
        if len(self.upper) != nv or len(self.lower) != nv:
            raise OutOfRange("bound vectors do not match the number of variables")

    @property
    def num_vars(self) -> int:
        return len(self.c)

    def objective(self, x: Sequence) -> Fraction:
        return sum((ci * xi for ci, xi in zip(self.c, x)), Fraction(0))

    def is_feasible(self, x: Sequence) -> bool:
        for j, xj in enumerate(x):
            if xj < self.lower[j] or (self.upper[j] is not None and xj > self.upper[j]):
                return False
        return all(
            sum((a * xj for a, xj in zip(row, x)), Fraction(0)) >= bi
            for row, bi in zip(self.A, self.b)
        )


@dataclass
class LPResult:
    optimum: Fraction
    primal: list
    dual: list  # multipliers of A x >= b
    bound_dual: list = field(default_factory=list)  # multipliers of x <= u


@dataclass
class ILPResult:
    optimum: int | Fraction
    witness: list
    lp_optimum: Fraction
    nodes: int


class _Tableau:
    """Rows ``T[i] . (x, rhs)``; ``basis[i]`` is the basic column of row i."""

    def __init__(self, rows, basis, ncols):
        self.T = rows
        self.basis = basis
        self.ncols = ncols

    def pivot(self, r: int, c: int) -> None:
        row = self.T[r]
        pv = row[c]
        if pv != 1:
            row = [x / pv for x in row]
            self.T[r] = row
        for i, other in enumerate(self.T):
            if i != r and other[c]:
                f = other[c]
                self.T[i] = [x - f * y for x, y in zip(other, row)]
        self.basis[r] = c

    def reduced_costs(self, cost: Sequence[Fraction]) -> list[Fraction]:
        rc = list(cost) + [Fraction(0)]
        for i, bj in enumerate(self.basis):
            cb = cost[bj]
            if cb:
                rc = [x - cb * y for x, y in zip(rc, self.T[i])]
        return rc

    def run(self, cost: Sequence[Fraction], allowed: int) -> list[Fraction]:
        """Minimize over columns < ``allowed``; returns final reduced costs."""
        while True:
            rc = self.reduced_costs(cost)
            enter = next((j for j in range(allowed) if rc[j] < 0), None)
            if enter is None:
                return rc
            best = None
            for i, row in enumerate(self.T):
                a = row[enter]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                raise Unbounded("objective is unbounded below")
            self.pivot(best[1], enter)


def _solve_standard(lp: LinearProgram) -> LPResult:
    """Solve with lower bounds already shifted to zero."""
    nv, m = lp.num_vars, len(lp.A)
    ubs = [j for j in range(nv) if lp.upper[j] is not None]
    for j in ubs:
        if lp.upper[j] < 0:
            raise Infeasible(f"variable {j} has an empty range")
    # columns: x (nv), surplus (m), upper slacks (len(ubs)), artificials
    n_surplus = m
    base = nv + n_surplus + len(ubs)
    rows, basis, art_rows = [], [], []
    for i in range(m):
        row = lp.A[i] + [Fraction(0)] * (n_surplus + len(ubs))
        row[nv + i] = Fraction(-1)
        rhs = lp.b[i]
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
            rows.append(row + [rhs])
            basis.append(nv + i)
        else:
            rows.append(row + [rhs])
            basis.append(None)
            art_rows.append(i)
    for k, j in enumerate(ubs):
        row = [Fraction(0)] * base
        row[j] = Fraction(1)
        row[nv + n_surplus + k] = Fraction(1)
        rows.append(row + [lp.upper[j]])
        basis.append(nv + n_surplus + k)
    n_art = len(art_rows)
    ncols = base + n_art
    full = []
    for i, row in enumerate(rows):
        full.append(row[:-1] + [Fraction(0)] * n_art + [row[-1]])
    for k, i in enumerate(art_rows):
        full[i][base + k] = Fraction(1)
        basis[i] = base + k
    tab = _Tableau(full, basis, ncols)

    if n_art:
        phase1 = [Fraction(0)] * base + [Fraction(1)] * n_art
        tab.run(phase1, ncols)
        infeas = sum((tab.T[i][-1] for i, bj in enumerate(tab.basis) if bj >= base), Fraction(0))
        if infeas > 0:
            raise Infeasible("constraints admit no solution")
        # drive zero-level artificials out of the basis, dropping redundant rows
        i = 0
        while i < len(tab.T):
            if tab.basis[i] >= base:
                col = next((j for j in range(base) if tab.T[i][j] != 0), None)
                if col is None:
                    del tab.T[i]
                    del tab.basis[i]
                    continue
                tab.pivot(i, col)
            i += 1
        tab.T = [row[:base] + [row[-1]] for row in tab.T]
        tab.ncols = base

    cost = lp.c + [Fraction(0)] * (base - nv)
    rc = tab.run(cost, base)
    x = [Fraction(0)] * nv
    for i, bj in enumerate(tab.basis):
        if bj < nv:
            x[bj] = tab.T[i][-1]
    y = [rc[nv + i] for i in range(m)]
    w_full = [Fraction(0)] * nv
    for k, j in enumerate(ubs):
        w_full[j] = rc[nv + n_surplus + k]
    opt = lp.objective(x)
    _certify(lp, x, y, w_full, opt)
    return LPResult(opt, x, y, w_full)


def _certify(lp: LinearProgram, x, y, w, opt) -> None:
    """Primal feasibility, dual feasibility and equal objectives."""
    if not lp.is_feasible(x):
        raise AssertionError("simplex returned an infeasible primal point")
    if any(v < 0 for v in y) or any(v < 0 for v in w):
        raise AssertionError("dual multipliers have the wrong sign")
    for j in range(lp.num_vars):
        col = sum((lp.A[i][j] * y[i] for i in range(len(y))), Fraction(0))
        if col - w[j] > lp.c[j]:
            raise AssertionError("dual constraint violated")
    dual_obj = sum((bi * yi for bi, yi in zip(lp.b, y)), Fraction(0)) - sum(
        (u * wj for u, wj in zip(lp.upper, w) if u is not None), Fraction(0)
    )
    if dual_obj != opt:
        raise AssertionError("primal and dual objectives differ")


def solve_lp(lp: LinearProgram) -> LPResult:
    """Exact optimum of ``lp`` with a verified dual certificate."""
    if all(l == 0 for l in lp.lower):
        return _solve_standard(lp)
    # substitute x = l + x'
    shift = lp.lower
    b = [
        bi - sum((a * l for a, l in zip(row, shift)), Fraction(0))
        for row, bi in zip(lp.A, lp.b)
    ]
    upper = [None if u is None else u - l for u, l in zip(lp.upper, shift)]
    shifted = LinearProgram(lp.c, lp.A, b, upper)
    res = _solve_standard(shifted)
    x = [xi + l for xi, l in zip(res.primal, shift)]
    return LPResult(lp.objective(x), x, res.dual, res.bound_dual)


def _is_integral(x) -> bool:
    return all(v.denominator == 1 for v in x)


def solve_ilp(lp: LinearProgram, node_budget: int = DEFAULT_NODE_BUDGET) -> ILPResult:
    """Exact integer optimum by best-bound branch and bound.

    Branches on the most fractional variable (lowest index on ties).  When
    the objective has integer coefficients, nodes whose LP bound rounds up
    to the incumbent are pruned.
    """
    if lp.num_vars > MAX_ILP_VARIABLES:
        raise OutOfRange(f"at most {MAX_ILP_VARIABLES} variables supported")
    int_obj = all(ci.denominator == 1 for ci in lp.c)

    def bound_of(value: Fraction):
        return math.ceil(value) if int_obj else value

    root = solve_lp(lp)
    lower = [Fraction(math.ceil(l)) for l in lp.lower]
    upper = [None if u is None else Fraction(math.floor(u)) for u in lp.upper]
    incumbent, witness = None, None
    heap = [(bound_of(root.optimum), 0, lower, upper, root)]
    counter, nodes = 1, 0
    while heap:
        bound, _, lo, up, res = heapq.heappop(heap)
        if incumbent is not None and bound >= incumbent:
            break
        if nodes >= node_budget:
            raise NodeBudgetExceeded(bound, incumbent, witness, nodes)
        nodes += 1
        x = res.primal
        if _is_integral(x):
            if incumbent is None or res.optimum < incumbent:
                incumbent = res.optimum if not int_obj else int(res.optimum)
                witness = [int(v) for v in x]
            continue
        j = max(
            range(lp.num_vars),
            key=lambda k: (-abs((x[k] - math.floor(x[k])) - Fraction(1, 2)), -k),
        )
        if x[j].denominator == 1:
            continue
        fl = Fraction(math.floor(x[j]))
        for child_lo, child_up in ((lo, up[:j] + [fl] + up[j + 1:]), (lo[:j] + [fl + 1] + lo[j + 1:], up)):
            if child_up[j] is not None and child_lo[j] > child_up[j]:
                continue
            sub = replace(lp, lower=child_lo, upper=child_up)
            try:
                cres = solve_lp(sub)
            except Infeasible:
                continue
            cb = bound_of(cres.optimum)
            if incumbent is not None and cb >= incumbent:
                continue
            heapq.heappush(heap, (cb, counter, child_lo, child_up, cres))
            counter += 1
    if incumbent is None:
        raise Infeasible("no integer point satisfies the constraints")
    return ILPResult(incumbent, witness, root.optimum, nodes)
