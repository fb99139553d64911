import json

import pandas as pd
import pytest

import nsr
from nsr.records import JSONRecord, Record, TabularRecord

logger = nsr._logger.getLogger("nsr")

pytestmark = [pytest.mark.unit]


def test_record_is_abstract():
    with pytest.raises(NotImplementedError):
        Record().write({"data": {}})


def test_json_document_is_stable(report_dir):
    paths = []
    for stem in ("first", "second"):
        record = JSONRecord(report_dir, stem, key="series")
        record.write({"data": {"b": 1, "a": [1, 2]}})
        record.write({"data": {"c": "x"}})
        record.close()
        paths.append(record.json_path)

    first, second = (p.read_text() for p in paths)
    assert first == second
    assert json.loads(first) == {"version": 1, "series": [{"a": [1, 2], "b": 1}, {"c": "x"}]}


def test_tabular_record_accepts_rows_and_frames(report_dir):
    record = TabularRecord(report_dir, "table")
    record.write({"data": {"x": 1, "y": 2}})
    record.write({"data": pd.Series({"x": 3, "y": 4})})
    record.write({"data": pd.DataFrame({"x": [5], "y": [6]})})
    record.close()

    df = pd.read_csv(record.tabular_file_path)
    assert list(df["x"]) == [1, 3, 5]

    with pytest.raises(RuntimeError):
        record.write({"data": 7})


def test_tabular_record_starts_fresh(report_dir):
    for _ in range(2):
        record = TabularRecord(report_dir, "fresh")
        record.write({"data": {"x": 1}})
    assert len(pd.read_csv(record.tabular_file_path)) == 1
