from __future__ import annotations

import json

import pytest

from subspace_codes.constructions import kk_code, layered_packing_code, trivial_covering_code
from subspace_codes.errors import EmptyCode, EmptyOrSingleton, EnumerationTooLarge
from subspace_codes.field import gf
from subspace_codes.oracle import (
    DistanceProfile,
    brute_covering_radius,
    brute_distance_profile,
    brute_max_packing,
    brute_min_distance,
    covered_everything,
    max_clique,
    max_packing_witness,
)
from subspace_codes.packing import packing_bounds, singleton_upper
from subspace_codes.qcomb import ball_volume, distance_count, projective_space_size
from subspace_codes.subspace import (
    AmbientSpace,
    canonicalize,
    distance,
    orthogonal_complement,
    random_subspace,
)

METRICS = ("subspace", "injection")


def test_profile_example():
    space = AmbientSpace(gf(2), 4)
    center = canonicalize([[1, 0, 0, 0], [0, 1, 0, 0]], gf(2))
    prof = brute_distance_profile(space, center, "subspace")
    assert prof.histogram[(2, 2)] == 18
    assert prof.histogram[(2, 0)] == 1
    assert prof.histogram[(2, 4)] == 16
    assert prof.total() == 67


@pytest.mark.parametrize("q,n", [(2, n) for n in range(1, 6)] + [(3, n) for n in range(1, 6)])
def test_profiles_match_counting_formulas(q, n):
    space = AmbientSpace(gf(q), n)
    for r in range(n + 1):
        center = next(space.grassmannian(r))
        for metric in METRICS:
            prof = brute_distance_profile(space, center, metric)
            for s in range(n + 1):
                for d in range(n + 1):
                    assert prof.histogram.get((s, d), 0) == distance_count(q, n, r, s, d, metric)
            for t in range(n + 1):
                assert prof.ball(t) == ball_volume(q, n, r, t, metric)


def test_profile_vs_pairwise_distances():
    space = AmbientSpace(gf(3), 3)
    center = canonicalize([[1, 2, 0]], gf(3))
    words = list(space.subspaces())
    for metric in METRICS:
        prof = brute_distance_profile(space, center, metric)
        for (s, d), c in prof.histogram.items():
            assert c == sum(1 for w in words if w.dim == s and distance(center, w, metric) == d)


def test_profile_round_trip():
    space = AmbientSpace(gf(3), 4)
    center = canonicalize([[1, 2, 0, 1], [0, 0, 1, 2]], gf(3))
    prof = brute_distance_profile(space, center, "injection")
    back = DistanceProfile.from_dict(json.loads(json.dumps(prof.to_dict())))
    assert back == prof


@pytest.mark.parametrize("n", [4, 5, 6])
def test_trivial_cover_radius(n):
    assert brute_covering_radius(trivial_covering_code(2, n), "subspace") == n // 2


@pytest.mark.parametrize("n", [4, 5, 6])
def test_single_half_space_injection_radius(n):
    f = gf(2)
    c = canonicalize([[1 if j == i else 0 for j in range(n)] for i in range(n // 2)], f, n)
    assert brute_covering_radius([c], "injection") == n - n // 2


def test_complement_pair_injection_radius():
    f = gf(2)
    c = canonicalize([[1, 0, 1, 1, 0], [0, 1, 1, 0, 1]], f)
    code = [c, orthogonal_complement(c)]
    assert brute_covering_radius(code, "injection") == 2
    assert covered_everything(code, "injection", 2)
    assert not covered_everything(code, "injection", 1)


def test_covering_radius_agrees_with_pairwise():
    f = gf(2)
    space = AmbientSpace(f, 4)
    import random

    rng = random.Random(5)
    words = list(space.subspaces())
    for _ in range(5):
        code = rng.sample(words, 4)
        for metric in METRICS:
            expected = max(min(distance(u, c, metric) for c in code) for u in words)
            assert brute_covering_radius(code, metric) == expected


def test_min_distance_examples():
    f = gf(2)
    assert brute_min_distance(kk_code(2, 6, 3, 2), "injection") == 2
    ends = [AmbientSpace(f, 5).zero(), AmbientSpace(f, 5).full()]
    for metric in METRICS:
        assert brute_min_distance(ends, metric) == 5
    assert brute_min_distance(layered_packing_code(2, 6, 3, "injection"), "injection") == 3
    with pytest.raises(EmptyOrSingleton):
        brute_min_distance(ends[:1], "subspace")
    with pytest.raises(EmptyCode):
        brute_covering_radius([], "subspace")


def test_min_distance_agrees_with_pairwise():
    import random

    rng = random.Random(9)
    f = gf(3)
    code = [random_subspace(f, 4, rng, rng.randint(0, 4)) for _ in range(6)]
    code = list(dict.fromkeys(code))
    for metric in METRICS:
        expected = min(
            distance(a, b, metric) for i, a in enumerate(code) for b in code[i + 1:]
        )
        assert brute_min_distance(code, metric) == expected


def test_max_packing_examples():
    assert brute_max_packing(2, 3, 3, "subspace") == 2
    assert brute_max_packing(2, 4, 1, "injection") == 67
    assert brute_max_packing(2, 4, 3, "injection") == 2
    with pytest.raises(EnumerationTooLarge):
        brute_max_packing(2, 6, 2, "subspace")


def test_max_packing_witness_is_a_packing():
    space = AmbientSpace(gf(2), 4)
    for metric, d in (("subspace", 3), ("injection", 2)):
        w = max_packing_witness(space, d, metric)
        assert brute_min_distance(w, metric) >= d


def test_max_packing_within_intervals():
    for n in range(2, 5):
        for d in range(2, n + 1):
            for metric in METRICS:
                val = brute_max_packing(2, n, d, metric)
                assert val in packing_bounds(2, n, d, metric), (n, d, metric, val)
        for d in range(2, n // 2 + 1):
            assert brute_max_packing(2, n, d, "injection") <= singleton_upper(2, n, d)


def test_max_clique_small_graphs():
    # 5-cycle has clique number 2, K4 has 4
    c5 = [0] * 5
    for i in range(5):
        for j in ((i + 1) % 5, (i - 1) % 5):
            c5[i] |= 1 << j
    assert len(max_clique(c5)) == 2
    k4 = [0b1111 & ~(1 << i) for i in range(4)]
    assert max_clique(k4) == [0, 1, 2, 3]
    assert max_clique([]) == []


def test_oracle_limit():
    with pytest.raises(EnumerationTooLarge):
        brute_covering_radius(trivial_covering_code(2, 6), "subspace", limit=100)
    assert projective_space_size(2, 6) > 100
