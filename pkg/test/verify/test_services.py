import pandas as pd
import pytest

import nsr
from nsr.data_protocols import Witness
from nsr.service import Service, ServiceGroup
from nsr.states import CheckReport
from nsr.verify.profiler_service import ProfilerService
from nsr.verify.record_service import RecordService

logger = nsr._logger.getLogger("nsr")

pytestmark = [pytest.mark.unit]


def test_profiler_measures_one_run():
    profiler = ProfilerService(logger=logger)
    profiler.start()
    sum(range(10_000))
    diag = profiler.stop(retries=2)
    assert diag.wall_ms >= 0
    assert diag.memory_usage > 0
    assert diag.retries == 2
    with pytest.raises(RuntimeError):
        profiler.stop()


def test_record_service_writes_both_documents(report_dir):
    record = RecordService(report_dir, "summary", csv=True, logger=logger)
    record.submit(CheckReport(name="kappa0", params={"n": 2, "order": 3, "seed": 0}))
    record.submit(
        CheckReport(
            name="poincare",
            kind="conjecture",
            status="fail",
            witnesses=[Witness.of((1, 0), 1, 2)],
        )
    )
    ServiceGroup({"record": record}).apply("shutdown")

    json_path, csv_path = record.paths
    assert json_path.exists()
    df = pd.read_csv(csv_path)
    assert list(df["name"]) == ["kappa0", "poincare"]
    assert list(df["witnesses(int)"]) == [0, 1]


def test_record_service_without_csv(report_dir):
    record = RecordService(report_dir, "only-json", csv=False)
    record.submit(CheckReport(name="kappa0"))
    record.shutdown()
    assert record.paths == [report_dir / "only-json.json"]


def test_service_group_applies_in_order():
    class Named(Service):
        def label(self):
            return self.name

    group = ServiceGroup({"a": Named("a"), "b": Named("b")})
    assert group.apply("label") == ["a", "b"]
    assert group.apply("label", order=["b", "missing", "a"]) == ["b", "a"]
