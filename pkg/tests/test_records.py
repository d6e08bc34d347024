"""Tests for breuil-enumerate profile tables."""

import json

import pytest

from modplab.records import CSV_COLUMNS, profile_records, write_records
from modplab.tame_arith import TameParams


def test_records_include_known_profile():
    records = profile_records(TameParams(p=5, d=2), 1, [1, 2])
    match = [r for r in records if r.xVec == [1, 2] and r.yVec == [0, 1]]
    assert len(match) == 1
    assert match[0].kappa0 == 16
    assert all(r.agree for r in records)


def test_single_record():
    (record,) = profile_records(TameParams(p=5, d=1), 0, [2])
    assert record.kappa0 == record.kappa0Lemma == 2


def test_json_output():
    records = profile_records(TameParams(p=5, d=1), 1, [2])
    decoded = json.loads(write_records(records, "json"))
    assert [row["kappa0"] for row in decoded] == [2, 3]
    assert set(decoded[0]) == set(CSV_COLUMNS)


def test_csv_output():
    records = profile_records(TameParams(p=5, d=2), 1, [1, 2])
    lines = write_records(records, "csv").splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert "5,2,1,1;2,0;1,16,16,true" in lines
    assert len(lines) == len(records) + 1


def test_unknown_format():
    with pytest.raises(ValueError):
        write_records([], "xml")
