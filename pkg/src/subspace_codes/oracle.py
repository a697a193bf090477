"""Brute-force ground truth at tiny scale.

Deliberately independent of the rank computations in :mod:`subspace`: each
subspace is expanded into the explicit set of its q^r vectors, stored as a
numpy bitmask over all q^n vectors, and dim(U ∩ V) is read off as
log_q |U ∩ V| from a popcount.  Everything else (distance histograms,
covering radii, minimum distances, maximum packings) is plain exhaustive
search on top of that.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable

import numpy as np

from .codefile import format_subspace
from .errors import EmptyCode, EmptyOrSingleton, EnumerationTooLarge
from .field import FieldSpec, gf
from .subspace import AmbientSpace, Subspace, canonicalize, enumerate_projective

DEFAULT_ORACLE_LIMIT = 50_000
MAX_PACKING_SPACE = 100


def _subspace_vectors(s: Subspace) -> list[int]:
    """Indices sum_j v_j q^j of every vector in the span of s.basis."""
    f: FieldSpec = s.field
    q, n = f.q, s.n
    weights = [q**j for j in range(n)]
    if s.dim == 0:
        return [0]
    if f.m == 1:
        basis = np.array(s.basis, dtype=np.int64)
        coeffs = np.array(list(product(range(q), repeat=s.dim)), dtype=np.int64)
        vecs = coeffs @ basis % q
        return (vecs @ np.array(weights, dtype=np.int64)).tolist()
    span = [tuple([0] * n)]
    for row in s.basis:
        span = [
            tuple(f.add(x, f.mul(c, y)) for x, y in zip(v, row))
            for v in span
            for c in range(q)
        ]
    return [sum(x * w for x, w in zip(v, weights)) for v in span]


class VectorSetIndex:
    """All of E(q, n) as vector-set bitmasks."""

    def __init__(self, space: AmbientSpace, limit: int = DEFAULT_ORACLE_LIMIT):
        size = space.size()
        if size > limit:
            raise EnumerationTooLarge(size, limit)
        self.space = space
        self.q = space.q
        self.n = space.n
        self.subspaces = list(enumerate_projective(space))
        self.position = {s: i for i, s in enumerate(self.subspaces)}
        self.dims = np.array([s.dim for s in self.subspaces], dtype=np.int64)
        nvec = self.q**self.n
        self.words = (nvec + 63) // 64
        self.masks = np.stack([self._mask(s) for s in self.subspaces])
        self._log = {self.q**k: k for k in range(self.n + 1)}

    def _mask(self, s: Subspace) -> np.ndarray:
        bits = np.zeros(self.words * 64, dtype=bool)
        bits[_subspace_vectors(s)] = True
        return np.packbits(bits, bitorder="little").view(np.uint64)

    def mask_of(self, s: Subspace) -> np.ndarray:
        i = self.position.get(s)
        return self.masks[i] if i is not None else self._mask(s)

    def meet_dims(self, center: Subspace, masks: np.ndarray | None = None) -> np.ndarray:
        """dim(center ∩ X) for every row X of ``masks`` (default: all of E)."""
        masks = self.masks if masks is None else masks
        sizes = np.bitwise_count(masks & self.mask_of(center)).sum(axis=1)
        return np.array([self._log[int(c)] for c in sizes], dtype=np.int64)

    def distance_row(self, center: Subspace, metric: str, subset: np.ndarray | None = None) -> np.ndarray:
        masks = self.masks if subset is None else self.masks[subset]
        dims = self.dims if subset is None else self.dims[subset]
        meet = self.meet_dims(center, masks)
        r = center.dim
        if metric == "subspace":
            return r + dims - 2 * meet
        if metric == "injection":
            return np.maximum(r, dims) - meet
        raise ValueError(f"unknown metric {metric!r}")


_INDEX_CACHE: dict[tuple, VectorSetIndex] = {}


def vector_index(space: AmbientSpace, limit: int = DEFAULT_ORACLE_LIMIT) -> VectorSetIndex:
    key = (space.field.p, space.field.m, space.n)
    idx = _INDEX_CACHE.get(key)
    if idx is None:
        idx = VectorSetIndex(space, limit)
        _INDEX_CACHE[key] = idx
    elif idx.space.size() > limit:
        raise EnumerationTooLarge(idx.space.size(), limit)
    return idx


@dataclass
class DistanceProfile:
    center: Subspace
    metric: str
    histogram: dict = field(default_factory=dict)  # (s, d) -> count

    def total(self) -> int:
        return sum(self.histogram.values())

    def ball(self, t: int) -> int:
        return sum(c for (s, d), c in self.histogram.items() if d <= t)

    def to_dict(self) -> dict:
        return {
            "q": self.center.field.q,
            "n": self.center.n,
            "center": format_subspace(self.center),
            "metric": self.metric,
            "histogram": [[s, d, c] for (s, d), c in sorted(self.histogram.items())],
        }

    @classmethod
    def from_dict(cls, d: dict) -> DistanceProfile:
        f = gf(d["q"])
        rows = [[f.from_digits(x) for x in row.split(",")] for row in d["center"].split(";")]
        hist = {(s, t): c for s, t, c in d["histogram"]}
        return cls(canonicalize(rows, f, d["n"]), d["metric"], hist)


def brute_distance_profile(
    space: AmbientSpace, center: Subspace, metric: str, limit: int = DEFAULT_ORACLE_LIMIT
) -> DistanceProfile:
    idx = vector_index(space, limit)
    dist = idx.distance_row(center, metric)
    hist = Counter(zip(idx.dims.tolist(), dist.tolist()))
    return DistanceProfile(center, metric, dict(hist))


def _codewords(code) -> list[Subspace]:
    words = list(getattr(code, "codewords", code))
    if not words:
        raise EmptyCode("code has no codewords")
    return words


def _space_of(words: list[Subspace], limit: int) -> AmbientSpace:
    return AmbientSpace(words[0].field, words[0].n, limit)


def brute_covering_radius(code, metric: str, limit: int = DEFAULT_ORACLE_LIMIT) -> int:
    """max over all U in E(q, n) of min distance from U to the code."""
    words = _codewords(code)
    idx = vector_index(_space_of(words, limit), limit)
    best = None
    for w in words:
        row = idx.distance_row(w, metric)
        best = row if best is None else np.minimum(best, row)
    return int(best.max())


def brute_min_distance(code, metric: str, limit: int = DEFAULT_ORACLE_LIMIT) -> int:
    words = _codewords(code)
    if len(words) < 2:
        raise EmptyOrSingleton("minimum distance needs at least two codewords")
    idx = vector_index(_space_of(words, limit), limit)
    masks = np.stack([idx.mask_of(w) for w in words])
    dims = np.array([w.dim for w in words], dtype=np.int64)
    best = None
    for i in range(len(words) - 1):
        meet = idx.meet_dims(words[i], masks[i + 1:])
        r, other = words[i].dim, dims[i + 1:]
        if metric == "subspace":
            d = r + other - 2 * meet
        elif metric == "injection":
            d = np.maximum(r, other) - meet
        else:
            raise ValueError(f"unknown metric {metric!r}")
        m = int(d.min())
        best = m if best is None else min(best, m)
    return best


def max_clique(adj: list[int]) -> list[int]:
    """Maximum clique of a graph given as integer adjacency bitsets.

    Branch and bound with a greedy-colouring bound; vertices are eliminated
    in canonical (index) order so the result is deterministic.
    """
    best: list[int] = []

    def colour(P: int):
        order, colours = [], []
        k = 0
        uncoloured = P
        while uncoloured:
            k += 1
            Q = uncoloured
            while Q:
                v = (Q & -Q).bit_length() - 1
                Q &= ~adj[v] & ~(1 << v)
                uncoloured &= ~(1 << v)
                order.append(v)
                colours.append(k)
        return order, colours

    def expand(R: list[int], P: int):
        nonlocal best
        order, colours = colour(P)
        for i in range(len(order) - 1, -1, -1):
            if len(R) + colours[i] <= len(best):
                return
            v = order[i]
            R.append(v)
            nP = P & adj[v]
            if nP:
                expand(R, nP)
            elif len(R) > len(best):
                best = sorted(R)
            R.pop()
            P &= ~(1 << v)

    all_vertices = (1 << len(adj)) - 1
    if adj:
        expand([], all_vertices)
    return best


def brute_max_packing(
    q: int, n: int, d: int, metric: str, limit: int = MAX_PACKING_SPACE
) -> int:
    """Exact A_S(q, n, d) or A_I(q, n, d) by maximum clique search."""
    space = AmbientSpace(gf(q), n, max(limit, DEFAULT_ORACLE_LIMIT))
    size = space.size()
    if size > limit:
        raise EnumerationTooLarge(size, limit)
    return len(max_packing_witness(space, d, metric))


def max_packing_witness(space: AmbientSpace, d: int, metric: str) -> list[Subspace]:
    idx = vector_index(space, space.limit)
    adj = []
    for i, s in enumerate(idx.subspaces):
        row = idx.distance_row(s, metric)
        bits = 0
        for j in np.flatnonzero(row >= d).tolist():
            if j != i:
                bits |= 1 << j
        adj.append(bits)
    return [idx.subspaces[i] for i in max_clique(adj)]


def covered_everything(code: Iterable[Subspace], metric: str, radius: int) -> bool:
    return brute_covering_radius(list(code), metric) <= radius
