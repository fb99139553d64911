import json

import pytest

import nsr
from nsr.cli import main, parse_args

logger = nsr._logger.getLogger("nsr")

pytestmark = [pytest.mark.unit]


def test_check_and_suite_are_exclusive():
    with pytest.raises(SystemExit):
        parse_args(["verify", "--check", "kappa0", "--suite", "all"])
    with pytest.raises(SystemExit):
        parse_args(["verify"])
    args = parse_args(["verify", "--check", "kappa0", "--param", "q=1/3", "--param", "t=2/5"])
    assert args.param == ["q=1/3", "t=2/5"]
    assert args.csv is None


def test_checks_lists_every_check(capsys):
    assert main(["checks"]) == 0
    out = capsys.readouterr().out
    assert "kappa0" in out
    assert "conjecture" in out


def test_verify_writes_the_report(report_dir, capsys):
    out = report_dir / "report.json"
    code = main(["verify", "--check", "v0-series", "--order", "4", "--out", str(out), "--no-csv"])
    assert code == 0
    document = json.loads(out.read_text())
    assert document["checks"][0]["status"] == "pass"
    assert not (report_dir / "report.csv").exists()
    assert "exit 0" in capsys.readouterr().out


def test_function_writes_the_series(report_dir):
    out = report_dir / "series.json"
    argv = ["function", "--tag", "Psi0", "--n", "2", "--order", "3", "--param", "beta=1", "--out", str(out)]
    assert main(argv) == 0
    entry = json.loads(out.read_text())["series"][0]
    assert entry["tag"] == "Psi0"
    assert entry["params"]["beta"] == "1"
    assert entry["trunc"] == 3
    assert {"d": [0, 0], "num": "1", "den": "1"} in entry["terms"]


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--check", "no-such-check"],
        ["verify", "--check", "v0-series", "--param", "q"],
        ["function", "--tag", "Psi0", "--order", "2"],
        ["function", "--tag", "FHat", "--order", "2", "--param", "zeta=1"],
    ],
)
def test_errors_exit_with_two(argv, report_dir, capsys):
    argv = argv + ["--out", str(report_dir / "out.json")]
    assert main(argv) == 2
    assert "[error]" in capsys.readouterr().err
