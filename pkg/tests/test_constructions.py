from __future__ import annotations

import pytest

from subspace_codes.constructions import (
    COVERING_RADIUS,
    MIN_DISTANCE,
    Code,
    Verification,
    grassmann_union_code,
    greedy_cover,
    kk_code,
    layered_packing_code,
    trivial_covering_code,
)
from subspace_codes.covering import (
    covering_bounds,
    greedy_upper_injection,
    greedy_upper_subspace,
    sphere_covering_lower,
    union_grassmannian_upper,
)
from subspace_codes.errors import EnumerationTooLarge, OutOfRange
from subspace_codes.field import gf
from subspace_codes.gabidulin import gabidulin_size
from subspace_codes.oracle import brute_covering_radius, brute_min_distance
from subspace_codes.packing import (
    layered_injection_lower,
    layered_subspace_lower,
)
from subspace_codes.subspace import Subspace

METRICS = ("subspace", "injection")


def _small_grid():
    for q, n_max in ((2, 6), (3, 4)):
        for n in range(2, n_max + 1):
            yield q, n


@pytest.mark.parametrize("d,size", [(1, 512), (2, 64), (3, 8)])
def test_kk_2_6_3(d, size):
    code = kk_code(2, 6, 3, d)
    assert len(code) == size == 2 ** (3 * (4 - d))
    assert all(w.dim == 3 for w in code)
    assert brute_min_distance(code, "injection") == d
    assert code.verify().ok


def test_kk_rejects_bad_parameters():
    with pytest.raises(OutOfRange):
        kk_code(2, 6, 4, 2)
    with pytest.raises(OutOfRange):
        kk_code(2, 6, 2, 3)
    with pytest.raises(OutOfRange):
        kk_code(2, 6, 2, 0)


@pytest.mark.parametrize("q", [2, 3])
def test_kk_cardinality(q):
    for n in range(2, 9):
        for r in range(1, n // 2 + 1):
            for d in range(1, r + 1):
                expected = q ** ((n - r) * (r - d + 1))
                if expected > 20_000:
                    with pytest.raises(EnumerationTooLarge):
                        kk_code(q, n, r, d, limit=20_000)
                    continue
                code = kk_code(q, n, r, d)
                assert len(code) == expected == gabidulin_size(q, r, n - r, d)


def test_kk_words_are_lifted():
    for w in kk_code(3, 5, 2, 2):
        assert w.pivots == (0, 1)
        assert [list(row[:2]) for row in w.basis] == [[1, 0], [0, 1]]


def test_claims_verified_on_small_grid():
    for q, n in _small_grid():
        h = n // 2
        codes = [trivial_covering_code(q, n)]
        for r in range(1, h + 1):
            codes += [kk_code(q, n, r, d) for d in range(1, r + 1)]
        codes += [layered_packing_code(q, n, d, "subspace") for d in range(2, n + 1)]
        codes += [layered_packing_code(q, n, d, "injection") for d in range(2, h + 1)]
        for rho in range(1, max(h, 1)):
            codes.append(grassmann_union_code(q, n, rho))
        for rho in range(0, n + 1):
            codes += [greedy_cover(q, n, rho, m) for m in METRICS]
        for code in codes:
            v = code.verify()
            assert v.status == "verified", (q, n, code.metadata, v)


@pytest.mark.parametrize("d", range(2, 7))
def test_layered_subspace_2_6(d):
    code = layered_packing_code(2, 6, d, "subspace")
    assert brute_min_distance(code, "subspace") >= d
    assert len(code) <= layered_subspace_lower(2, 6, d)


def test_layered_examples():
    assert len(layered_packing_code(2, 6, 3, "subspace")) == 66
    code = layered_packing_code(2, 6, 3, "injection")
    assert brute_min_distance(code, "injection") == 3
    for d in (2, 3):
        assert len(layered_packing_code(2, 6, d, "injection")) <= layered_injection_lower(2, 6, d)
    with pytest.raises(OutOfRange):
        layered_packing_code(2, 6, 4, "injection")
    with pytest.raises(OutOfRange):
        layered_packing_code(2, 6, 7, "subspace")


def test_union_2_6_1():
    code = grassmann_union_code(2, 6, 1)
    assert len(code) == 1304 == union_grassmannian_upper(2, 6, 1)[0]
    assert code.metadata["parameters"]["dims"] == [0, 2, 4, 6]
    assert brute_covering_radius(code, "subspace") <= 1


def test_union_size_matches_bound():
    for q, n in _small_grid():
        for rho in range(1, n // 2):
            assert len(grassmann_union_code(q, n, rho)) == union_grassmannian_upper(q, n, rho)[0]


def test_trivial_cover():
    code = trivial_covering_code(2, 6)
    assert len(code) == 2
    assert code.claim == {"check": COVERING_RADIUS, "metric": "subspace", "value": 3}
    assert brute_covering_radius(code, "subspace") == 3


def test_greedy_within_bounds():
    for q, n in [(2, 4), (2, 5), (2, 6), (3, 4)]:
        for rho in range(1, n // 2):
            s = greedy_cover(q, n, rho, "subspace")
            i = greedy_cover(q, n, rho, "injection")
            assert len(s) <= greedy_upper_subspace(q, n, rho)
            assert len(i) <= greedy_upper_injection(q, n, rho)
            assert len(s) >= sphere_covering_lower(q, n, rho, "subspace").lower
            assert len(i) >= sphere_covering_lower(q, n, rho, "injection").lower
            assert len(s) >= covering_bounds(q, n, rho, "subspace").lower
            assert len(i) >= covering_bounds(q, n, rho, "injection").lower


def test_greedy_2_6_examples():
    assert len(greedy_cover(2, 6, 2, "subspace")) <= greedy_upper_subspace(2, 6, 2)
    code = greedy_cover(2, 6, 1, "injection")
    assert len(code) <= greedy_upper_injection(2, 6, 1)
    assert brute_covering_radius(code, "injection") <= 1


def test_greedy_sizes_monotone_in_radius():
    for metric in METRICS:
        sizes = [len(greedy_cover(2, 5, rho, metric)) for rho in range(6)]
        assert all(a >= b for a, b in zip(sizes, sizes[1:])), sizes


def test_greedy_is_deterministic():
    a = greedy_cover(2, 5, 1, "injection")
    b = greedy_cover(2, 5, 1, "injection")
    assert a.codewords == b.codewords
    assert a.to_text() == b.to_text()


def test_greedy_limit():
    with pytest.raises(EnumerationTooLarge):
        greedy_cover(2, 7, 1, "injection", limit=1000)


def test_failed_and_unverified_claims():
    code = kk_code(2, 4, 2, 2).with_claim(MIN_DISTANCE, "injection", 3)
    v = code.verify()
    assert v.status == "failed" and v.measured == 2 and v.claimed == 3 and not v.ok
    big = kk_code(2, 8, 4, 4)
    assert big.verify(limit=1000).status == "unverified"
    assert Verification.from_dict(v.to_dict()) == v


def test_code_rejects_foreign_codewords():
    f2, f3 = gf(2), gf(3)
    with pytest.raises(ValueError):
        Code(f2, 3, (Subspace.zero(f3, 3),))
    with pytest.raises(ValueError):
        Code(f2, 3, (Subspace.zero(f2, 4),))
    code = Code(f2, 3, (Subspace.zero(f2, 3), Subspace.zero(f2, 3)))
    assert len(code) == 1 and Subspace.zero(f2, 3) in code


def test_text_round_trip_keeps_verification():
    code = kk_code(3, 5, 2, 2)
    text = code.to_text()
    back = Code.from_text(text)
    assert back == code
    assert back.metadata["verification"]["status"] == "verified"
    assert back.metadata["claim"] == code.claim
