from __future__ import annotations

import json
from importlib import resources

import pytest

from subspace_codes import tables
from subspace_codes.tables import TableReport, check_cell, published_tables, reproduce_table


def _row(report, d):
    return {c.key: c for c in next(r for r in report.rows if r.d == d).cells}


@pytest.fixture(scope="module")
def table_i():
    return reproduce_table("I")


@pytest.fixture(scope="module")
def table_ii():
    return reproduce_table("II")


def test_table_i_reproduces(table_i):
    bad = [(r.d, c.key) for r in table_i.rows for c in r.cells if not c.ok]
    assert table_i.ok, bad
    assert [r.d for r in table_i.rows] == list(range(2, 11))


@pytest.mark.parametrize("d", [9, 10])
def test_table_i_top_rows_exact(table_i, d):
    row = _row(table_i, d)
    assert row["half_dimension_lower"].ours == 33
    assert row["layered_lower"].ours == 33
    assert row["upper"].ours == 35


@pytest.mark.parametrize("d", [7, 8])
def test_table_i_lower_1025(table_i, d):
    row = _row(table_i, d)
    assert row["half_dimension_lower"].ours == row["layered_lower"].ours == 1025
    assert row["upper"].ours >= 1260


def test_table_i_d3_layered_value(table_i):
    # the published layered lower bound is larger than ours at d = 3
    cell = _row(table_i, 3)["layered_lower"]
    assert cell.ours == 1049091 and cell.published == 1167967


def test_table_i_d2_exceeds_published(table_i):
    row = _row(table_i, 2)
    for key in ("half_dimension_lower", "layered_lower"):
        assert row[key].annotation == "exceeds-published-lower"
        assert row[key].ours >= row[key].published
        assert row[key].ours <= row["upper"].ours


def test_table_ii_reproduces(table_ii):
    assert table_ii.ok
    assert _row(table_ii, 4)["layered_lower"].ours == 1027
    row5 = _row(table_ii, 5)
    assert row5["layered_lower"].ours == 35 and row5["upper"].ours == 35
    assert row5["relation_lower"].ours == 33


def test_prior_columns_not_recomputed(table_i):
    for r in table_i.rows:
        for key in ("prior_lower_1", "prior_lower_2"):
            cell = _row(table_i, r.d)[key]
            assert cell.ours is None and cell.annotation == "n/a" and cell.ok


def test_published_values_come_from_fixture():
    raw = json.loads(
        resources.files("subspace_codes").joinpath("data/published_tables.json").read_text()
    )
    assert raw == published_tables()
    for which in ("I", "II"):
        rep = reproduce_table(which)
        rows = {r["d"]: r["cells"] for r in raw["tables"][which]["rows"]}
        for r in rep.rows:
            for c in r.cells:
                assert c.published == rows[r.d][c.key][0]
                assert c.annotation == rows[r.d][c.key][1]


def test_annotations_are_known():
    for t in published_tables()["tables"].values():
        for r in t["rows"]:
            for _, ann in r["cells"].values():
                assert ann in tables.ANNOTATIONS


def test_check_cell_rules():
    assert check_cell("exact-match", 5, 5, None)
    assert not check_cell("exact-match", 4, 5, None)
    assert check_cell("one-sided-lower", 4, 5, None)
    assert not check_cell("one-sided-lower", 6, 5, None)
    assert check_cell("one-sided-upper", 6, 5, None)
    assert not check_cell("one-sided-upper", 4, 5, None)
    assert check_cell("exceeds-published-lower", 7, 5, 10)
    assert not check_cell("exceeds-published-lower", 11, 5, 10)
    assert check_cell("n/a", None, 5, None)
    assert not check_cell("exact-match", None, 5, None)
    with pytest.raises(ValueError):
        check_cell("bogus", 1, 1, None)


def test_report_round_trip(table_i, table_ii):
    for rep in (table_i, table_ii):
        back = TableReport.from_dict(json.loads(json.dumps(rep.to_dict())))
        assert back.to_dict() == rep.to_dict()
