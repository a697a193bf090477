"""Gabidulin (MRD) matrix codes and their lifts.

GF(q^m) is built as polynomials over an arbitrary base field GF(q) (itself
possibly an extension of GF(p)), so q need not be prime.  Elements of the
big field are integer codes sum c_i q^i with c_i base-field codes; the
coefficient vector (c_0, ..., c_{m-1}) is the expansion over the polynomial
basis 1, y, ..., y^{m-1}.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .field import FieldSpec


def _pmod(a: list[int], mod: Sequence[int], f: FieldSpec) -> list[int]:
    """Remainder of ``a`` by the monic ``mod`` over the field ``f``."""
    a = list(a)
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = f.sub(a[i - dm + j], f.mul(c, mod[j]))
    out = a[:dm]
    while out and out[-1] == 0:
        out.pop()
    return out


def _monic(f: FieldSpec, degree: int) -> Iterator[tuple[int, ...]]:
    for low in product(range(f.q), repeat=degree):
        yield tuple(reversed(low)) + (1,)


@lru_cache(maxsize=None)
def _extension_modulus(p: int, e: int, m: int) -> tuple[int, ...]:
    from .field import field_new

    f = field_new(p, e)
    for cand in _monic(f, m):
        # ordered by integer code, highest coefficient first
        if _is_irreducible(cand, f):
            return cand
    raise AssertionError("irreducible polynomials exist in every degree")


def _is_irreducible(poly: Sequence[int], f: FieldSpec) -> bool:
    m = len(poly) - 1
    if m == 1:
        return True
    for k in range(1, m // 2 + 1):
        for g in _monic(f, k):
            if not _pmod(list(poly), g, f):
                return False
    return True


class ExtensionField:
    """GF(q^m) over a base :class:`FieldSpec` GF(q)."""

    def __init__(self, base: FieldSpec, m: int):
        self.base = base
        self.m = m
        self.q = base.q
        self.size = base.q**m
        self.modulus = _extension_modulus(base.p, base.m, m) if m > 1 else (0, 1)
        self._exp = self._log = None
        if self.size <= 2**16 and m > 1:
            self._build_logs()

    def to_vector(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            a, c = divmod(a, self.q)
            out.append(c)
        return out

    def from_vector(self, v: Sequence[int]) -> int:
        code = 0
        for c in reversed(v):
            code = code * self.q + c
        return code

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return self.base.add(a, b)
        return self.from_vector([self.base.add(x, y) for x, y in zip(self.to_vector(a), self.to_vector(b))])

    def _slow_mul(self, a: int, b: int) -> int:
        f = self.base
        va, vb = self.to_vector(a), self.to_vector(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(va):
            if x:
                for j, y in enumerate(vb):
                    if y:
                        prod[i + j] = f.add(prod[i + j], f.mul(x, y))
        r = _pmod(prod, self.modulus, f)
        return self.from_vector(r + [0] * (self.m - len(r)))

    def _build_logs(self) -> None:
        for g in range(2, self.size):
            exp = [1]
            x = g
            while x != 1 and len(exp) < self.size:
                exp.append(x)
                x = self._slow_mul(x, g)
            if len(exp) == self.size - 1:
                break
        log = [0] * self.size
        for k, x in enumerate(exp):
            log[x] = k
        self._exp, self._log = exp, log

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return self.base.mul(a, b)
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.size - 1)]
        return self._slow_mul(a, b)

    def pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def frobenius(self, a: int, i: int = 1) -> int:
        """a ** (q ** i), the GF(q)-linear field automorphism."""
        return self.pow(a, self.q ** (i % self.m))

    def basis_element(self, j: int) -> int:
        """y^j as a code (j < m)."""
        return self.q**j


def gabidulin_matrices(base: FieldSpec, r: int, m: int, d: int) -> Iterator[list[list[int]]]:
    """All r x m matrices of the Gabidulin code with minimum rank distance d.

    Codewords are evaluations of linearized polynomials sum_{i<k} f_i z^{q^i},
    k = r - d + 1, at the points 1, y, ..., y^{r-1} of GF(q^m); row j is the
    base-field expansion of f(y^j).  Requires 1 <= d <= r <= m.
    """
    if not 1 <= d <= r <= m:
        raise ValueError(f"need 1 <= d <= r <= m, got d={d}, r={r}, m={m}")
    big = ExtensionField(base, m)
    k = r - d + 1
    # frob[j][i] = (y^j)^(q^i)
    points = [big.basis_element(j) for j in range(r)]
    frob = [[big.frobenius(g, i) for i in range(k)] for g in points]
    for coeffs in product(range(big.size), repeat=k):
        rows = []
        for j in range(r):
            acc = 0
            for i, c in enumerate(coeffs):
                if c:
                    acc = big.add(acc, big.mul(c, frob[j][i]))
            rows.append(big.to_vector(acc))
        yield rows


def gabidulin_size(q: int, r: int, m: int, d: int) -> int:
    return q ** (m * (r - d + 1))
