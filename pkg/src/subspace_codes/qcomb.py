"""Exact q-analog counting: Gaussian binomials, distance counts, ball volumes.

Every function here returns Python integers (or exact rationals for the
volume exponent); nothing on a counting path touches floating point.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import OutOfRange

_ROWS: dict[int, list[list[int]]] = {}

METRICS = ("subspace", "injection")


def _check_q(q: int) -> None:
    if not isinstance(q, int) or q < 2:
        raise OutOfRange(f"field size {q!r} must be an integer >= 2")


def _pascal_row(q: int, n: int) -> list[int]:
    rows = _ROWS.setdefault(q, [[1]])
    while len(rows) <= n:
        prev = rows[-1]
        k = len(rows)
        row = [1] * (k + 1)
        qr = 1
        for r in range(1, k):
            qr *= q
            # [k r] = [k-1 r-1] + q^r [k-1 r]
            row[r] = prev[r - 1] + qr * prev[r]
        rows.append(row)
    return rows[n]


def gaussian_binomial(q: int, n: int, r: int) -> int:
    """Number of r-dimensional subspaces of GF(q)^n; zero when r < 0 or r > n."""
    _check_q(q)
    if n < 0:
        raise OutOfRange(f"ambient dimension {n} is negative")
    if r < 0 or r > n:
        return 0
    return _pascal_row(q, n)[r]


def projective_space_size(q: int, n: int) -> int:
    """|E(q, n)|, the number of subspaces of all dimensions."""
    _check_q(q)
    if n < 0:
        raise OutOfRange(f"ambient dimension {n} is negative")
    return sum(_pascal_row(q, n))


def _check_rs(n: int, r: int, s: int, d: int) -> None:
    if n < 0 or not (0 <= r <= n and 0 <= s <= n):
        raise OutOfRange(f"dimensions r={r}, s={s} outside 0..{n}")
    if d < 0:
        raise OutOfRange(f"distance {d} is negative")


def n_subspace(q: int, n: int, r: int, s: int, d: int) -> int:
    """Number of s-dimensional V at subspace distance d from a fixed r-dimensional U."""
    _check_q(q)
    _check_rs(n, r, s, d)
    twice_u = r + d - s
    if twice_u < 0 or twice_u % 2:
        return 0
    u = twice_u // 2
    if u > d:
        return 0
    return q ** (u * (d - u)) * gaussian_binomial(q, r, u) * gaussian_binomial(q, n - r, d - u)


def n_injection(q: int, n: int, r: int, s: int, d: int) -> int:
    """Number of s-dimensional V at injection distance d from a fixed r-dimensional U."""
    _check_q(q)
    _check_rs(n, r, s, d)
    ds = 2 * d - abs(r - s)
    if ds < 0:
        return 0
    return n_subspace(q, n, r, s, ds)


def distance_count(q: int, n: int, r: int, s: int, d: int, metric: str) -> int:
    if metric == "subspace":
        return n_subspace(q, n, r, s, d)
    if metric == "injection":
        return n_injection(q, n, r, s, d)
    raise ValueError(f"unknown metric {metric!r}")


def ball_volume(q: int, n: int, r: int, t: int, metric: str) -> int:
    """Size of the ball of radius t around any r-dimensional subspace."""
    _check_q(q)
    if not 0 <= r <= n:
        raise OutOfRange(f"dimension {r} outside 0..{n}")
    if t < 0:
        raise OutOfRange(f"radius {t} is negative")
    # distances never exceed n, so clamp to keep the sum finite
    top = min(t, n)
    return sum(
        distance_count(q, n, r, s, d, metric) for s in range(n + 1) for d in range(top + 1)
    )


def g_exponent(n: int, r: int, t: int) -> Fraction:
    """Piecewise exponent governing the subspace-metric ball volume."""
    half = n // 2
    if not (0 <= r <= half and 0 <= t <= half):
        raise OutOfRange(f"need 0 <= r, t <= {half}; got r={r}, t={t}")
    t = Fraction(t)
    if 3 * t <= n - 2 * r:
        return t * (n - r - t)
    if 3 * t <= n + 4 * r:
        return Fraction((n - 2 * r) ** 2, 12) + t * (2 * n - t) / 4
    return (t - r) * (n - t + r)
