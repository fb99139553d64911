import json

import pytest

import nsr
from nsr.exceptions import InvalidCheckSpecError
from nsr.states import CheckReport, CheckSpec
from nsr.verify import build_suite, emit_report, exit_code, run_check, run_suite
from nsr.verify.harness import EXIT_CONJECTURE_FAILED, EXIT_OK, EXIT_PROVEN_FAILED

logger = nsr._logger.getLogger("nsr")

pytestmark = [pytest.mark.unit]


def test_v0_series_passes():
    report = run_check(CheckSpec(name="v0-series"))
    assert report.status == "pass"
    assert report.kind == "proven"
    assert report.params["order"] == 7
    assert report.params["observed"]["coefficients"][:3] == ["-2", "-6", "-8"]
    assert report.diagnostics.wall_ms >= 0


def test_kappa0_passes_with_an_order():
    report = run_check(CheckSpec(name="kappa0", n=2, order=2, seed=3))
    assert report.status == "pass", report.witnesses
    assert report.params["source"] == "sample"
    assert "q" in report.params["point"]


def test_char_gl1_counts_partitions():
    report = run_check(CheckSpec(name="char-gl1", n=2, seed=1))
    assert report.status == "pass", report.witnesses
    assert report.params["order"] == 8
    assert report.params["observed"]["uniform"] == ["1", "1", "2", "3", "5"]


def test_toda_stationary_holds_for_generic_spectra():
    report = run_check(CheckSpec(name="toda-stationary", n=2))
    assert report.status == "pass", report.witnesses
    assert report.kind == "conjecture"
    assert report.params["observed"]["eigenvalue"]


def test_explicit_degenerate_point_is_skipped():
    spec = CheckSpec(name="kappa0", n=2, order=2, params={"q": "-1"})
    report = run_check(spec)
    assert report.status == "degenerate-skipped"
    assert report.message
    assert report.params["given"] == {"q": "-1"}
    assert not report.failed


def test_order_above_the_cap_fails():
    report = run_check(CheckSpec(name="v0-series", order=10_000))
    assert report.status == "fail"
    assert report.witnesses[0].lhs == "ResourceCapError"


@pytest.mark.parametrize(
    "spec",
    [
        CheckSpec(name="no-such-check"),
        CheckSpec(name="theta-threebody", n=2),
        CheckSpec(name="v0-series", trials=0),
        CheckSpec(name="v0-series", order=-1),
        CheckSpec(name="v0-series", params={"zeta": "1"}),
    ],
)
def test_invalid_specs(spec):
    with pytest.raises(InvalidCheckSpecError):
        run_check(spec)


def test_build_suite():
    proven = build_suite("proven", seed=7)
    assert proven
    assert all(spec.seed == 7 for spec in proven)
    names = {(spec.name, spec.n) for spec in proven}
    assert ("theta-threebody", 3) in names
    assert ("theta-threebody", 2) not in names
    assert not any(spec.name == "poincare" for spec in proven)
    assert len(build_suite("all")) == len(proven) + len(build_suite("conjecture"))
    with pytest.raises(InvalidCheckSpecError):
        build_suite("lemmas")


def test_run_suite_keeps_the_order():
    specs = [CheckSpec(name="v0-series", order=3), CheckSpec(name="theta-lemmas", order=2)]
    reports = run_suite(specs, jobs=1)
    assert [r.name for r in reports] == ["v0-series", "theta-lemmas"]
    assert run_suite([]) == []


def test_exit_codes():
    ok = CheckReport(name="a", kind="proven")
    proven_fail = CheckReport(name="b", kind="proven", status="fail")
    conjecture_fail = CheckReport(name="c", kind="conjecture", status="fail")
    skipped = CheckReport(name="d", kind="proven", status="degenerate-skipped")
    assert exit_code([]) == EXIT_OK
    assert exit_code([ok, skipped]) == EXIT_OK
    assert exit_code([ok, conjecture_fail]) == EXIT_CONJECTURE_FAILED
    assert exit_code([conjecture_fail, proven_fail]) == EXIT_PROVEN_FAILED


def test_emit_report(report_dir):
    reports = [
        CheckReport(name="a", kind="proven", params={"n": 2}),
        CheckReport(name="b", kind="conjecture", status="fail"),
    ]
    code = emit_report(reports, report_dir / "report.json", csv=True)
    assert code == EXIT_CONJECTURE_FAILED

    document = json.loads((report_dir / "report.json").read_text())
    assert document["version"] == 1
    assert [c["name"] for c in document["checks"]] == ["a", "b"]
    assert (report_dir / "report.csv").exists()

    emit_report(reports[:1], report_dir / "quiet.json", csv=False)
    assert not (report_dir / "quiet.csv").exists()


@pytest.mark.slow
def test_proven_suite_on_two_workers(report_dir):
    specs = [spec for spec in build_suite("proven") if spec.n == 2]
    reports = run_suite(specs, jobs=2)
    assert len(reports) == len(specs)
    assert emit_report(reports, report_dir / "proven.json") == EXIT_OK


@pytest.mark.slow
def test_conjecture_suite_has_no_failures():
    specs = [spec for spec in build_suite("conjecture") if spec.n == 2]
    assert specs
    reports = run_suite(specs, jobs=1)
    failed = [(r.name, r.witnesses) for r in reports if r.status == "fail"]
    assert not failed
    assert exit_code(reports) == EXIT_OK
