"""Concrete subspace codes: trivial covers, lifted Gabidulin (KK) codes,
layered packings, unions of Grassmannians and greedy covers.

Every :class:`Code` carries a claim (a minimum distance or a covering radius
under a named metric).  :meth:`Code.certify` checks the claim with the
brute-force oracle when the ambient space is small enough and records the
outcome in the metadata; otherwise the code is marked ``unverified``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable

import numpy as np

from .codefile import dump_code, load_code
from .covering import union_grassmannian_dims
from .errors import EnumerationTooLarge, OutOfRange
from .field import FieldSpec, gf
from .gabidulin import gabidulin_matrices, gabidulin_size
from .oracle import (
    DEFAULT_ORACLE_LIMIT,
    brute_covering_radius,
    brute_min_distance,
    vector_index,
)
from .packing import _layer_dims
from .qcomb import gaussian_binomial, projective_space_size
from .subspace import AmbientSpace, Subspace, canonicalize, enumerate_grassmannian

DEFAULT_CODE_LIMIT = 10**6
GREEDY_LIMIT = 10_000

MIN_DISTANCE = "min-distance"
COVERING_RADIUS = "covering-radius"
CHECKS = (MIN_DISTANCE, COVERING_RADIUS)


@dataclass(frozen=True)
class Verification:
    check: str
    metric: str
    claimed: int | None
    measured: int | None
    status: str  # verified | failed | unverified

    @property
    def ok(self) -> bool:
        return self.status == "verified"

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "metric": self.metric,
            "claimed": self.claimed,
            "measured": self.measured,
            "status": self.status,
        }

    @classmethod
    def from_dict(cls, d: dict) -> Verification:
        return cls(d["check"], d["metric"], d["claimed"], d["measured"], d["status"])


def _holds(check: str, claimed: int, measured: int) -> bool:
    # a minimum distance claim is a floor, a covering radius claim a ceiling
    return measured >= claimed if check == MIN_DISTANCE else measured <= claimed


@dataclass(frozen=True)
class Code:
    field: FieldSpec
    n: int
    codewords: tuple[Subspace, ...]
    metadata: dict = dc_field(default_factory=dict, compare=False)

    def __post_init__(self):
        seen: dict[Subspace, None] = {}
        for w in self.codewords:
            if w.field is not self.field or w.n != self.n:
                raise ValueError("codeword from a different ambient space")
            seen.setdefault(w, None)
        object.__setattr__(self, "codewords", tuple(seen))

    def __len__(self) -> int:
        return len(self.codewords)

    def __iter__(self):
        return iter(self.codewords)

    def __contains__(self, s: Subspace) -> bool:
        return s in set(self.codewords)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def claim(self) -> dict | None:
        return self.metadata.get("claim")

    def with_claim(self, check: str, metric: str, value: int) -> Code:
        meta = dict(self.metadata)
        meta["claim"] = {"check": check, "metric": metric, "value": value}
        meta.pop("verification", None)
        return Code(self.field, self.n, self.codewords, meta)

    def verify(self, check: str | None = None, metric: str | None = None,
               limit: int = DEFAULT_ORACLE_LIMIT) -> Verification:
        claim = self.claim or {}
        check = check or claim.get("check")
        metric = metric or claim.get("metric")
        if check not in CHECKS:
            raise ValueError(f"unknown check {check!r}")
        claimed = claim.get("value") if (claim.get("check"), claim.get("metric")) == (check, metric) else None
        if projective_space_size(self.q, self.n) > limit:
            return Verification(check, metric, claimed, None, "unverified")
        if check == MIN_DISTANCE:
            measured = brute_min_distance(self, metric, limit)
        else:
            measured = brute_covering_radius(self, metric, limit)
        if claimed is None:
            status = "verified"
        else:
            status = "verified" if _holds(check, claimed, measured) else "failed"
        return Verification(check, metric, claimed, measured, status)

    def certify(self, limit: int = DEFAULT_ORACLE_LIMIT) -> Code:
        """Copy with the oracle's verdict on the claim stored in the metadata."""
        if self.claim is None:
            return self
        meta = dict(self.metadata)
        meta["verification"] = self.verify(limit=limit).to_dict()
        return Code(self.field, self.n, self.codewords, meta)

    def to_text(self, limit: int = DEFAULT_ORACLE_LIMIT) -> str:
        code = self if "verification" in self.metadata else self.certify(limit)
        return dump_code(code.field, code.n, code.codewords, code.metadata)

    @classmethod
    def from_text(cls, text: str) -> Code:
        f, n, words, meta = load_code(text)
        return cls(f, n, tuple(words), meta)


def _code(f: FieldSpec, n: int, words: Iterable[Subspace], name: str, params: dict,
          check: str, metric: str, value: int) -> Code:
    meta = {
        "construction": name,
        "parameters": params,
        "claim": {"check": check, "metric": metric, "value": value},
    }
    return Code(f, n, tuple(words), meta)


def trivial_covering_code(q: int, n: int) -> Code:
    """{ {0}, GF(q)^n }: subspace covering radius n // 2."""
    if n < 1:
        raise OutOfRange("ambient dimension must be positive")
    f = gf(q)
    words = [Subspace.zero(f, n), Subspace.full(f, n)]
    return _code(f, n, words, "trivial", {"q": q, "n": n}, COVERING_RADIUS, "subspace", n // 2)


def _lifted_layer(f: FieldSpec, n: int, r: int, delta: int, limit: int) -> list[Subspace]:
    """r-dimensional codewords with pairwise injection distance >= delta.

    Uses the lifted Gabidulin code [I_r | A] when r <= n - r and the mirrored
    lifting [A | I_r] (A a transposed Gabidulin codeword) above half
    dimension; layers too thin for delta hold a single codeword.
    """
    if r == 0:
        return [Subspace.zero(f, n)]
    if r == n:
        return [Subspace.full(f, n)]
    m = n - r
    small = min(r, m)
    if delta > small:
        rows = [[int(j == i) for j in range(n)] for i in range(r)]
        return [canonicalize(rows, f, n)]
    delta = max(delta, 1)
    size = gabidulin_size(f.q, small, max(r, m), delta)
    if size > limit:
        raise EnumerationTooLarge(size, limit)
    out = []
    if r <= m:
        eye = [[int(j == i) for j in range(r)] for i in range(r)]
        pivots = tuple(range(r))
        for a in gabidulin_matrices(f, r, m, delta):
            basis = tuple(tuple(e + row) for e, row in zip(eye, a))
            out.append(Subspace(f, n, basis, pivots))
    else:
        eye = [[int(j == i) for j in range(r)] for i in range(r)]
        for mat in gabidulin_matrices(f, m, r, delta):
            a = [list(col) for col in zip(*mat)]
            out.append(canonicalize([row + e for row, e in zip(a, eye)], f, n))
    return out


def kk_code(q: int, n: int, r: int, d: int, limit: int = DEFAULT_CODE_LIMIT) -> Code:
    """Lifted Gabidulin code in E_r(q, n) with minimum injection distance d."""
    if not 1 <= d <= r <= n - r:
        raise OutOfRange(f"need 1 <= d <= r <= n - r, got n={n}, r={r}, d={d}")
    f = gf(q)
    words = _lifted_layer(f, n, r, d, limit)
    params = {"q": q, "n": n, "r": r, "d": d}
    return _code(f, n, words, "kk", params, MIN_DISTANCE, "injection", d)


def layered_packing_code(q: int, n: int, d: int, metric: str, limit: int = DEFAULT_CODE_LIMIT) -> Code:
    """Union of lifted codes on dimension layers spaced d apart."""
    f = gf(q)
    half = n // 2
    params = {"q": q, "n": n, "d": d, "metric": metric}
    if metric == "subspace":
        if not 2 <= d <= n:
            raise OutOfRange(f"need 2 <= d <= n, got d={d}")
        if n % 2 == 1 and d == n:
            words = [Subspace.zero(f, n), Subspace.full(f, n)]
        else:
            delta = (d + 1) // 2
            words = [w for r in _layer_dims(n, d, False) for w in _lifted_layer(f, n, r, delta, limit)]
    elif metric == "injection":
        if not 2 <= d <= half:
            raise OutOfRange(f"need 2 <= d <= {half}, got d={d}")
        words = [Subspace.zero(f, n)]
        for r in _layer_dims(n, d, True):
            words.extend(_lifted_layer(f, n, r, d, limit))
        words.append(Subspace.full(f, n))
    else:
        raise ValueError(f"unknown metric {metric!r}")
    if len(words) > limit:
        raise EnumerationTooLarge(len(words), limit)
    return _code(f, n, words, "layered", params, MIN_DISTANCE, metric, d)


def grassmann_union_code(q: int, n: int, rho: int, limit: int = DEFAULT_CODE_LIMIT) -> Code:
    """All subspaces whose dimension lies in J_1 or J_2."""
    j1, j2 = union_grassmannian_dims(n, rho)
    dims = sorted(set(j1) | set(j2))
    total = sum(gaussian_binomial(q, n, r) for r in dims)
    if total > limit:
        raise EnumerationTooLarge(total, limit)
    f = gf(q)
    space = AmbientSpace(f, n, limit)
    words = [w for r in dims for w in enumerate_grassmannian(space, r)]
    params = {"q": q, "n": n, "rho": rho, "dims": dims}
    return _code(f, n, words, "union", params, COVERING_RADIUS, "subspace", rho)


def _greedy_set_cover(cover: np.ndarray) -> list[int]:
    """Greedy cover of the columns; ties go to the lowest row index."""
    remaining = np.ones(cover.shape[1], dtype=bool)
    gains = cover.sum(axis=1, dtype=np.int64)
    chosen = []
    while remaining.any():
        best = int(np.argmax(gains))
        if gains[best] == 0:
            raise AssertionError("candidate set cannot cover every target")
        newly = cover[best] & remaining
        chosen.append(best)
        remaining &= ~newly
        gains -= cover[:, newly].sum(axis=1, dtype=np.int64)
    return chosen


def _containment(idx, small: np.ndarray, large: np.ndarray, small_dim: int) -> np.ndarray:
    """cover[i, j] = small_i is a subspace of large_j."""
    full = idx.q**small_dim
    sub = idx.masks[small]
    sup = idx.masks[large]
    return np.stack([np.bitwise_count(sup & m).sum(axis=1) == full for m in sub])


def greedy_cover(q: int, n: int, rho: int, metric: str, limit: int = GREEDY_LIMIT) -> Code:
    """Deterministic greedy covering code of covering radius rho.

    Subspace metric: {0} and the full space, plus for each target dimension t
    a greedy cover of E_t by (t - rho)-spaces below half dimension and by
    (t + rho)-spaces above it.  Injection metric: greedy over all of E(q, n).
    """
    if not 0 <= rho <= n:
        raise OutOfRange(f"need 0 <= rho <= n, got {rho}")
    f = gf(q)
    size = projective_space_size(q, n)
    if size > limit:
        raise EnumerationTooLarge(size, limit)
    params = {"q": q, "n": n, "rho": rho, "metric": metric}
    space = AmbientSpace(f, n, max(limit, DEFAULT_ORACLE_LIMIT))
    half = n // 2
    if metric == "subspace" and rho >= half:
        words = [Subspace.zero(f, n), Subspace.full(f, n)]
        return _code(f, n, words, "greedy", params, COVERING_RADIUS, metric, rho)
    idx = vector_index(space, space.limit)
    if metric == "subspace":
        words = [Subspace.zero(f, n)]
        for t in range(rho + 1, n - rho):
            targets = np.flatnonzero(idx.dims == t)
            if t <= half:
                centers = np.flatnonzero(idx.dims == t - rho)
                cover = _containment(idx, centers, targets, t - rho)
            else:
                centers = np.flatnonzero(idx.dims == t + rho)
                cover = _containment(idx, targets, centers, t).T
            words.extend(idx.subspaces[centers[i]] for i in _greedy_set_cover(cover))
        words.append(Subspace.full(f, n))
    elif metric == "injection":
        cover = np.stack([idx.distance_row(s, metric) <= rho for s in idx.subspaces])
        words = [idx.subspaces[i] for i in _greedy_set_cover(cover)]
    else:
        raise ValueError(f"unknown metric {metric!r}")
    return _code(f, n, words, "greedy", params, COVERING_RADIUS, metric, rho)


CONSTRUCTIONS = ("kk", "layered", "union", "greedy", "trivial")
