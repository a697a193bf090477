"""Exact arithmetic in GF(q), q = p^m, over a polynomial basis.

Elements are handled internally as integer codes: the coefficient vector
``(c_0, ..., c_{m-1})`` of ``c_0 + c_1 x + ... + c_{m-1} x^{m-1}`` is stored
as ``sum(c_i * p**i)``.  :class:`FieldElement` wraps a code together with its
owning :class:`FieldSpec` for the public, operator-overloaded API; the
linear-algebra layers work on raw codes for speed.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .errors import (
    DegreeZero,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    NotPrime,
    OutOfRange,
)

MAX_FIELD_SIZE = 2**20
_TABLE_LIMIT = 256
_LOG_LIMIT = 2**16
_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q == p**m``; raise :class:`NotPrime` otherwise."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise NotPrime(f"{q} is not a prime power")
    return p, m


def is_prime_power(q: int) -> bool:
    try:
        factor_prime_power(q)
    except NotPrime:
        return False
    return True


# -- polynomials over GF(p), coefficient lists low-to-high -----------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``b`` over GF(p)."""
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _trim([x % p for x in a[:db]])


def _monic_polys(p: int, degree: int) -> Iterator[tuple[int, ...]]:
    """All monic polynomials of ``degree`` in increasing code order."""
    for low in product(range(p), repeat=degree):
        yield tuple(reversed(low)) + (1,)


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Exhaustive factor check: no monic divisor of degree 1..deg/2."""
    m = len(poly) - 1
    if m < 1 or poly[-1] % p != 1:
        return False
    if m == 1:
        return True
    # roots first: cheap and rejects most reducible candidates
    for x in range(p):
        if sum(c * pow(x, i, p) for i, c in enumerate(poly)) % p == 0:
            return False
    for k in range(2, m // 2 + 1):
        for f in _monic_polys(p, k):
            if not _poly_mod(poly, f, p):
                return False
    return True


def _poly_code(coeffs: Sequence[int], p: int) -> int:
    return sum(c * p**i for i, c in enumerate(coeffs))


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree ``m`` over GF(p).

    Candidates are ordered by their integer code, i.e. lexicographically
    from the highest-degree coefficient down.
    """
    for cand in sorted(_monic_polys(p, m), key=lambda f: _poly_code(f, p)):
        if is_irreducible(cand, p):
            return cand
    raise AssertionError("an irreducible polynomial of every degree exists")


class FieldSpec:
    """GF(p^m) with a fixed monic irreducible modulus.

    Instances are immutable; :func:`field_new` caches one per ``(p, m)`` so
    identity comparison is meaningful.
    """

    __slots__ = (
        "p", "m", "q", "modulus", "_add", "_mul", "_exp", "_log", "__weakref__",
    )

    def __init__(self, p: int, m: int, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise NotPrime(f"characteristic {p} is not prime")
        if m < 1:
            raise DegreeZero("extension degree must be >= 1")
        if p**m > MAX_FIELD_SIZE:
            raise FieldTooLarge(f"{p}^{m} exceeds {MAX_FIELD_SIZE}")
        if modulus is None:
            modulus = smallest_irreducible(p, m)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or not is_irreducible(modulus, p):
            raise ValueError(f"{modulus} is not a monic irreducible of degree {m}")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        self._add = None
        self._mul = None
        self._exp = None
        self._log = None

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"

    def __reduce__(self):
        return (field_new, (self.p, self.m))

    # -- code <-> coefficients -------------------------------------------
    def coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            a, c = divmod(a, self.p)
            out.append(c)
        return out

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.m:
            raise OutOfRange(f"{len(coeffs)} coefficients for degree {self.m}")
        return _poly_code([int(c) % self.p for c in coeffs], self.p)

    def to_digits(self, a: int) -> str:
        """Base-p digit string, lowest degree first (GF(4): x+1 -> '11')."""
        cs = self.coeffs(a)
        if self.p <= len(_DIGITS):
            return "".join(_DIGITS[c] for c in cs)
        return ".".join(str(c) for c in cs)

    def from_digits(self, s: str) -> int:
        s = s.strip().lower()
        if self.p <= len(_DIGITS):
            cs = [_DIGITS.index(ch) for ch in s]
        else:
            cs = [int(t) for t in s.split(".")]
        if len(cs) != self.m or any(c >= self.p for c in cs):
            raise ValueError(f"{s!r} is not an element of {self!r}")
        return _poly_code(cs, self.p)

    # -- arithmetic on codes ---------------------------------------------
    def _check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise OutOfRange(f"code {a} outside {self!r}")
        return a

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self.q <= _TABLE_LIMIT:
            return self._add_table()[a][b]
        return _poly_code(
            [(x + y) % self.p for x, y in zip(self.coeffs(a), self.coeffs(b))], self.p
        )

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return _poly_code([-c % self.p for c in self.coeffs(a)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self.q <= _LOG_LIMIT:
            exp, log = self._log_tables()
            return exp[(log[a] + log[b]) % (self.q - 1)]
        return self._poly_mul(a, b)

    def _poly_mul(self, a: int, b: int) -> int:
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        return _poly_code(_poly_mod(prod, self.modulus, self.p), self.p)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self!r}")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        if self.q <= _LOG_LIMIT:
            exp, log = self._log_tables()
            return exp[-log[a] % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def frobenius(self, a: int, i: int = 1) -> int:
        """``a ** (p ** i)``; the identity when ``i`` is a multiple of ``m``."""
        return self.pow(a, self.p ** (i % self.m))

    # -- lazily built tables -----------------------------------------------
    def _add_table(self):
        if self._add is None:
            cs = [self.coeffs(a) for a in range(self.q)]
            self._add = [
                [_poly_code([(x + y) % self.p for x, y in zip(ca, cb)], self.p) for cb in cs]
                for ca in cs
            ]
        return self._add

    def _log_tables(self):
        if self._exp is None:
            for g in range(2, self.q):
                exp = [1]
                x = g
                while x != 1:
                    exp.append(x)
                    x = self._poly_mul(x, g)
                if len(exp) == self.q - 1:
                    break
            log = [0] * self.q
            for k, x in enumerate(exp):
                log[x] = k
            self._exp, self._log = exp, log
        return self._exp, self._log

    def mul_table(self) -> list[list[int]]:
        """Full multiplication table; only sensible for small fields."""
        if self._mul is None:
            if self.q > _TABLE_LIMIT:
                raise FieldTooLarge("multiplication table only for q <= 256")
            self._mul = [[self.mul(a, b) for b in range(self.q)] for a in range(self.q)]
        return self._mul

    def add_table(self) -> list[list[int]]:
        if self.q > _TABLE_LIMIT:
            raise FieldTooLarge("addition table only for q <= 256")
        return [[self.add(a, b) for b in range(self.q)] for a in range(self.q)]

    # -- element API -------------------------------------------------------
    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise FieldMismatch(f"{value!r} does not belong to {self!r}")
            return value
        if isinstance(value, str):
            return FieldElement(self, self.from_digits(value))
        if isinstance(value, int):
            if self.m == 1:
                return FieldElement(self, value % self.p)
            return FieldElement(self, self._check(value))
        return FieldElement(self, self.from_coeffs(value))

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, a) for a in range(self.q)]

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)


@lru_cache(maxsize=None)
def field_new(p: int, m: int = 1) -> FieldSpec:
    """Return the (cached) field GF(p^m) with its canonical modulus."""
    return FieldSpec(p, m)


def gf(q: int) -> FieldSpec:
    """Field of order ``q``, a prime power."""
    if q > MAX_FIELD_SIZE:
        raise FieldTooLarge(f"{q} exceeds {MAX_FIELD_SIZE}")
    return field_new(*factor_prime_power(q))


class FieldElement:
    __slots__ = ("field", "code")

    def __init__(self, field: FieldSpec, code: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "code", code)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.code
        if isinstance(other, int):
            return self.field(other).code
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.code, b))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.code, b))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(self.code, b))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.code, e))

    def inv(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.code))

    def frobenius(self, i: int = 1) -> FieldElement:
        return FieldElement(self.field, self.field.frobenius(self.code, i))

    @property
    def coeffs(self) -> list[int]:
        return self.field.coeffs(self.code)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == self.field(other).code
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.code))

    def __bool__(self):
        return self.code != 0

    def __str__(self):
        return self.field.to_digits(self.code)

    def __repr__(self):
        return f"{self.field!r}({self.field.to_digits(self.code)!r})"


def field_arith(a: FieldElement, b: FieldElement | None, kind: str, i: int = 1) -> FieldElement:
    """Dispatch one field operation by name: add, mul, inv or frobenius."""
    if b is not None and a.field is not b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "inv":
        return a.inv()
    if kind == "frobenius":
        return a.frobenius(i)
    raise ValueError(f"unknown operation {kind!r}")
