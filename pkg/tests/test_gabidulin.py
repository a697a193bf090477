from __future__ import annotations

from itertools import combinations

import pytest

from subspace_codes.field import gf
from subspace_codes.gabidulin import ExtensionField, gabidulin_matrices, gabidulin_size
from subspace_codes.subspace import rank


def _diff(f, a, b):
    return [[f.sub(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


@pytest.mark.parametrize("q,r,m,d", [(2, 2, 3, 1), (2, 2, 3, 2), (2, 3, 3, 2), (3, 2, 2, 2), (4, 2, 2, 2), (2, 3, 4, 3)])
def test_minimum_rank_distance(q, r, m, d):
    f = gf(q)
    words = list(gabidulin_matrices(f, r, m, d))
    assert len(words) == gabidulin_size(q, r, m, d) == q ** (m * (r - d + 1))
    assert len({tuple(map(tuple, w)) for w in words}) == len(words)
    dist = min(rank(_diff(f, a, b), f) for a, b in combinations(words, 2))
    assert dist == d


def test_code_is_linear():
    f = gf(3)
    words = {tuple(map(tuple, w)) for w in gabidulin_matrices(f, 2, 3, 2)}
    ws = list(words)
    for a in ws[:10]:
        for b in ws[:10]:
            s = tuple(tuple(f.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))
            assert s in words


def test_bad_parameters():
    with pytest.raises(ValueError):
        next(gabidulin_matrices(gf(2), 3, 2, 1))
    with pytest.raises(ValueError):
        next(gabidulin_matrices(gf(2), 2, 3, 3))


@pytest.mark.parametrize("q,m", [(2, 3), (3, 2), (4, 2), (2, 5), (9, 2)])
def test_extension_field_axioms(q, m):
    big = ExtensionField(gf(q), m)
    els = range(big.size)
    nonzero = [a for a in els if a]
    # multiplicative group is cyclic of order size - 1
    for a in nonzero:
        assert big.pow(a, big.size - 1) == 1
        assert any(big.mul(a, b) == 1 for b in nonzero)
    sample = list(els)[:9]
    for a in sample:
        for b in sample:
            assert big.mul(a, b) == big.mul(b, a)
            for c in sample[:4]:
                assert big.mul(a, big.add(b, c)) == big.add(big.mul(a, b), big.mul(a, c))
                assert big._slow_mul(a, b) == big.mul(a, b)


def test_frobenius_is_additive_and_fixes_base():
    big = ExtensionField(gf(4), 2)
    for a in range(big.size):
        for b in range(0, big.size, 3):
            assert big.frobenius(big.add(a, b)) == big.add(big.frobenius(a), big.frobenius(b))
    for a in range(4):
        assert big.frobenius(a) == a
    assert all(big.frobenius(a, 2) == a for a in range(big.size))


def test_vector_round_trip():
    big = ExtensionField(gf(3), 3)
    for a in range(big.size):
        assert big.from_vector(big.to_vector(a)) == a
