"""Subspaces of GF(q)^n in canonical reduced row echelon form.

A :class:`Subspace` is identified by its unique RREF basis, which makes
equality and hashing O(1) and gives a total order used for deterministic
tie-breaking throughout the package: first by dimension, then by pivot set,
then by the row-major entries.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .errors import (
    AmbientMismatch,
    EnumerationTooLarge,
    FieldMismatch,
    OutOfRange,
    RaggedMatrix,
    WrongHyperplaneDimension,
)
from .field import FieldElement, FieldSpec
from .qcomb import gaussian_binomial, projective_space_size

DEFAULT_ENUM_LIMIT = 10**8
MAX_ENUM_DIMENSION = 24

Matrix = tuple[tuple[int, ...], ...]


def rref(rows: Sequence[Sequence[int]], field: FieldSpec) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form of a matrix of field codes.

    Returns the nonzero rows and the pivot columns.
    """
    mat = [list(r) for r in rows]
    if not mat:
        return (), ()
    ncols = len(mat[0])
    nrows = len(mat)
    pivots: list[int] = []
    prime = field.m == 1
    p = field.p
    top = 0
    for c in range(ncols):
        piv = next((i for i in range(top, nrows) if mat[i][c]), None)
        if piv is None:
            continue
        mat[top], mat[piv] = mat[piv], mat[top]
        lead = mat[top][c]
        if prime:
            if lead != 1:
                s = pow(lead, p - 2, p)
                mat[top] = [x * s % p for x in mat[top]]
            row = mat[top]
            for i in range(nrows):
                f = mat[i][c]
                if i != top and f:
                    mat[i] = [(x - f * y) % p for x, y in zip(mat[i], row)]
        else:
            if lead != 1:
                s = field.inv(lead)
                mat[top] = [field.mul(s, x) for x in mat[top]]
            row = mat[top]
            for i in range(nrows):
                f = mat[i][c]
                if i != top and f:
                    mat[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(mat[i], row)]
        pivots.append(c)
        top += 1
        if top == nrows:
            break
    return tuple(tuple(r) for r in mat[:top]), tuple(pivots)


def rank(rows: Sequence[Sequence[int]], field: FieldSpec) -> int:
    return len(rref(rows, field)[1])


class Subspace:
    """A point of the projective space E(q, n), stored as its RREF basis."""

    __slots__ = ("field", "n", "basis", "pivots", "_hash")

    def __init__(self, field: FieldSpec, n: int, basis: Matrix, pivots: tuple[int, ...]):
        # trusted constructor: callers guarantee ``basis`` is already RREF
        self.field = field
        self.n = n
        self.basis = basis
        self.pivots = pivots
        self._hash = hash((field.p, field.m, n, basis))

    @property
    def dim(self) -> int:
        return len(self.basis)

    r = dim

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> Subspace:
        return cls(field, n, (), ())

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> Subspace:
        eye = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        return cls(field, n, eye, tuple(range(n)))

    def sort_key(self):
        return (self.dim, self.pivots, self.basis)

    def __lt__(self, other: Subspace) -> bool:
        return self.sort_key() < other.sort_key()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field is other.field and self.n == other.n and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        rows = ";".join(",".join(self.field.to_digits(x) for x in row) for row in self.basis)
        return f"Subspace({self.field!r}, n={self.n}, [{rows}])"

    def matrix(self) -> list[list[FieldElement]]:
        return [[FieldElement(self.field, x) for x in row] for row in self.basis]

    def vectors(self) -> Iterator[tuple[int, ...]]:
        """Every vector of the subspace (``q ** dim`` of them)."""
        f = self.field
        for coeffs in product(range(f.q), repeat=self.dim):
            v = [0] * self.n
            for c, row in zip(coeffs, self.basis):
                if c:
                    v = [f.add(x, f.mul(c, y)) for x, y in zip(v, row)]
            yield tuple(v)

    def contains_vector(self, v: Sequence[int]) -> bool:
        return rank(list(self.basis) + [list(v)], self.field) == self.dim

    def issubspace(self, other: Subspace) -> bool:
        _check_ambient(self, other)
        return intersection_dim(self, other) == self.dim


def _coerce_row(row, field: FieldSpec) -> list[int]:
    out = []
    for x in row:
        if isinstance(x, FieldElement):
            if x.field is not field:
                raise FieldMismatch(f"{x!r} does not belong to {field!r}")
            out.append(x.code)
        elif isinstance(x, str):
            out.append(field.from_digits(x))
        else:
            out.append(field(int(x)).code)
    return out


def canonicalize(rows: Iterable[Sequence], field: FieldSpec, n: int | None = None) -> Subspace:
    """Subspace spanned by ``rows`` (ints, digit strings or field elements)."""
    mat = [_coerce_row(r, field) for r in rows]
    if mat:
        widths = {len(r) for r in mat}
        if len(widths) != 1:
            raise RaggedMatrix(f"rows of differing lengths {sorted(widths)}")
        width = widths.pop()
        if n is not None and width != n:
            raise RaggedMatrix(f"rows have length {width}, expected {n}")
        n = width
    elif n is None:
        raise RaggedMatrix("cannot infer ambient dimension from an empty matrix")
    basis, pivots = rref(mat, field)
    return Subspace(field, n, basis, pivots)


def _check_ambient(u: Subspace, v: Subspace) -> None:
    if u.field is not v.field or u.n != v.n:
        raise AmbientMismatch(f"{u.field!r}^{u.n} vs {v.field!r}^{v.n}")


def sum_dim(u: Subspace, v: Subspace) -> int:
    _check_ambient(u, v)
    return rank(u.basis + v.basis, u.field)


def intersection_dim(u: Subspace, v: Subspace) -> int:
    return u.dim + v.dim - sum_dim(u, v)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    _check_ambient(u, v)
    return canonicalize(u.basis + v.basis, u.field, u.n)


def intersection(u: Subspace, v: Subspace) -> Subspace:
    """U ∩ V computed as (U^⊥ + V^⊥)^⊥."""
    _check_ambient(u, v)
    return orthogonal_complement(subspace_sum(orthogonal_complement(u), orthogonal_complement(v)))


def subspace_distance(u: Subspace, v: Subspace) -> int:
    """dim(U + V) - dim(U ∩ V)."""
    s = sum_dim(u, v)
    return 2 * s - u.dim - v.dim


def injection_distance(u: Subspace, v: Subspace) -> int:
    """max(dim U, dim V) - dim(U ∩ V)."""
    return max(u.dim, v.dim) - intersection_dim(u, v)


def distance(u: Subspace, v: Subspace, metric: str) -> int:
    if metric == "subspace":
        return subspace_distance(u, v)
    if metric == "injection":
        return injection_distance(u, v)
    raise ValueError(f"unknown metric {metric!r}")


def orthogonal_complement(u: Subspace) -> Subspace:
    """Null space of U's basis under the standard dot product."""
    f = u.field
    piv = set(u.pivots)
    rows = []
    for col in range(u.n):
        if col in piv:
            continue
        v = [0] * u.n
        v[col] = 1
        for i, p in enumerate(u.pivots):
            v[p] = f.neg(u.basis[i][col])
        rows.append(v)
    return canonicalize(rows, f, u.n)


def puncture(v: Subspace, w: Subspace) -> Subspace:
    """Map V in E(q, n) to E(q, n-1) through the hyperplane W.

    A nonzero V goes to the span of the first dim(V)-1 RREF rows of V ∩ W,
    written in coordinates relative to W's RREF basis (the coordinate of a
    vector of W on basis row i is its entry in W's i-th pivot column).
    """
    _check_ambient(v, w)
    if w.dim != w.n - 1:
        raise WrongHyperplaneDimension(f"W has dimension {w.dim}, need {w.n - 1}")
    if v.dim == 0:
        return Subspace.zero(v.field, v.n - 1)
    meet = intersection(v, w)
    rows = meet.basis[: v.dim - 1]
    coords = [[row[p] for p in w.pivots] for row in rows]
    return canonicalize(coords, v.field, v.n - 1)


@dataclass(frozen=True)
class AmbientSpace:
    """GF(q)^n together with the enumeration guard."""

    field: FieldSpec
    n: int
    limit: int = DEFAULT_ENUM_LIMIT

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ENUM_DIMENSION:
            raise OutOfRange(f"ambient dimension {self.n} outside 1..{MAX_ENUM_DIMENSION}")

    @property
    def q(self) -> int:
        return self.field.q

    def size(self) -> int:
        return projective_space_size(self.q, self.n)

    def zero(self) -> Subspace:
        return Subspace.zero(self.field, self.n)

    def full(self) -> Subspace:
        return Subspace.full(self.field, self.n)

    def grassmannian(self, r: int) -> Iterator[Subspace]:
        return enumerate_grassmannian(self, r)

    def subspaces(self) -> Iterator[Subspace]:
        return enumerate_projective(self)


def enumerate_grassmannian(space: AmbientSpace, r: int) -> Iterator[Subspace]:
    """Every r-dimensional subspace once, ordered by pivots then free entries."""
    n, f = space.n, space.field
    if not 0 <= r <= n:
        raise OutOfRange(f"dimension {r} outside 0..{n}")
    count = gaussian_binomial(f.q, n, r)
    if count > space.limit:
        raise EnumerationTooLarge(count, space.limit)
    return _grassmannian(f, n, r)


def _grassmannian(f: FieldSpec, n: int, r: int) -> Iterator[Subspace]:
    q = f.q
    for pivots in combinations(range(n), r):
        pset = set(pivots)
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, n) if j not in pset]
        template = [[0] * n for _ in range(r)]
        for i, p in enumerate(pivots):
            template[i][p] = 1
        for values in product(range(q), repeat=len(free)):
            for (i, j), x in zip(free, values):
                template[i][j] = x
            yield Subspace(f, n, tuple(tuple(row) for row in template), pivots)


def enumerate_projective(space: AmbientSpace) -> Iterator[Subspace]:
    """All of E(q, n), dimension by dimension."""
    count = space.size()
    if count > space.limit:
        raise EnumerationTooLarge(count, space.limit)
    for r in range(space.n + 1):
        yield from _grassmannian(space.field, space.n, r)


def random_subspace(
    field: FieldSpec, n: int, rng: random.Random, r: int | None = None
) -> Subspace:
    """Uniform-ish random subspace; exact dimension ``r`` when given."""
    if r is None:
        r = rng.randint(0, n)
    while True:
        rows = [[rng.randrange(field.q) for _ in range(n)] for _ in range(r)]
        s = canonicalize(rows, field, n)
        if s.dim == r:
            return s
