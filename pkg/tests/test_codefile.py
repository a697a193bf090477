from __future__ import annotations

import random

import pytest

from subspace_codes.codefile import dump_code, format_subspace, load_code
from subspace_codes.errors import CodeFormatError
from subspace_codes.field import gf
from subspace_codes.subspace import Subspace, canonicalize, random_subspace


@pytest.mark.parametrize("q", [2, 3, 4, 8, 9])
def test_round_trip(q):
    f = gf(q)
    rng = random.Random(q)
    words = [random_subspace(f, 5, rng) for _ in range(20)]
    words += [Subspace.zero(f, 5), Subspace.full(f, 5)]
    meta = {"construction": "test", "parameters": {"q": q}}
    f2, n, back, meta2 = load_code(dump_code(f, 5, words, meta))
    assert f2.q == q and n == 5
    assert back == words
    assert meta2 == meta
    assert all(w.field is f2 for w in back)


def test_zero_subspace_line():
    f = gf(2)
    assert format_subspace(Subspace.zero(f, 3)) == "0,0,0"
    assert format_subspace(canonicalize([[1, 1, 0], [0, 0, 1]], f)) == "1,1,0;0,0,1"


def test_comments_and_blank_lines():
    text = "# a code\n\n2 3\n# comment\n1,0,0\n\n0,1,1\n"
    f, n, words, meta = load_code(text)
    assert (f.q, n, meta) == (2, 3, {})
    assert [w.dim for w in words] == [1, 1]


def test_unreduced_rows_are_canonicalized():
    _, _, words, _ = load_code("3 3\n2,0,0;1,1,0\n")
    assert words[0] == canonicalize([[1, 0, 0], [0, 1, 0]], gf(3))


def test_extension_field_symbols():
    f = gf(4)
    s = canonicalize([[1, f.from_digits("11"), 0]], f)
    text = dump_code(f, 3, [s])
    assert "11" in text
    assert load_code(text)[2] == [s]


@pytest.mark.parametrize(
    "text",
    [
        "",
        "# only a comment\n",
        "2\n1,0\n",
        "6 3\n1,0,0\n",
        "2 0\n",
        "2 x\n",
        "2 3\n1,0\n",
        "2 3\n1,0,2\n",
        "2 3\n1,0,0;1,0\n",
        "2 3\n# metadata {bad json\n",
    ],
)
def test_malformed_files(text):
    with pytest.raises(CodeFormatError):
        load_code(text)
