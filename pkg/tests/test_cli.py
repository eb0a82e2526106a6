import json

import pytest

from braidkit.cli import main
from braidkit.report import NEGATIVE, Report, Skip
from braidkit.suites import ConfigError, RunConfig, run_suite
from braidkit.symmetries import load_symmetry_json, make_symmetry


def test_gen_jordan_roundtrip(tmp_path, capsys):
    out = tmp_path / "j.json"
    assert main(["gen", "jordan", "a=1", "b=0", "--out", str(out)]) == 0
    sym = load_symmetry_json(json.loads(out.read_text()))
    assert sym.R == make_symmetry("jordan", a=1, b=0).R
    assert sym.dumps() == out.read_text().strip()


def test_gen_flip(tmp_path):
    out = tmp_path / "f.json"
    assert main(["gen", "flip", "N=3", "--out", str(out)]) == 0
    assert load_symmetry_json(json.loads(out.read_text())).N == 3


@pytest.mark.parametrize("argv", [
    ["gen", "flip", "--out", "x.json"],
    ["gen", "flip", "N=2", "q=3"],
    ["gen", "jordan", "a"],
    ["gen", "nosuch"],
])
def test_gen_bad_params(argv, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(argv) == 2


def test_verify_custom_file(tmp_path, capsys):
    out = tmp_path / "s.json"
    assert main(["gen", "standard", "N=2", "--out", str(out)]) == 0
    assert main(["verify", "--symmetry", str(out), "--suite", "core"]) == 0


def test_verify_core_standard(tmp_path, capsys):
    rp = tmp_path / "r.json"
    assert main(["verify", "--symmetry", "standard", "--n", "2", "--suite", "core", "--report", str(rp)]) == 0
    data = json.loads(rp.read_text())
    assert data["schema_version"] == 1
    assert data["summary"]["fail"] == 0
    assert "timing_seconds" in data
    assert "0 failed" in capsys.readouterr().out


def test_verify_rtt_jordan_negative_record(tmp_path):
    rp = tmp_path / "r.json"
    code = main(["verify", "--symmetry", "jordan", "--a", "1", "--b", "0", "--suite", "rtt-yangian",
                 "--report", str(rp)])
    recs = {r["id"]: r for r in json.loads(rp.read_text())["records"]}
    det = recs["rtt-yangian.det_central"]
    assert det["expected"] == NEGATIVE and det["status"] == "pass"
    assert code == 1  # the CH identity with N fails


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", "nosuch"],
    ["verify", "--symmetry", "flip", "--suite", "yangian-hecke"],
    ["verify", "--symmetry", "standard", "--suite", "yangian-involutive"],
    ["verify", "--symmetry", "missing-file.json"],
    ["verify", "--symmetry", "standard", "--q", "1"],
    ["verify", "--symmetry", "flip", "--n", "0"],
    ["verify", "--n", "two"],
])
def test_verify_config_errors(argv, capsys):
    assert main(argv) == 2


def test_verify_failing_check_exit_one():
    # too few samples for the certified degree is a recorded failure, not a crash
    assert main(["verify", "--symmetry", "flip", "--suite", "yangian-involutive", "--samples", "1"]) == 1


def test_report_deterministic():
    cfg = RunConfig(symmetry="jordan", a="1", b="1", suite="core", seed=3)
    a, b = run_suite(cfg), run_suite(cfg)
    assert a.canonical() == b.canonical()
    assert json.loads(a.canonical())["schema_version"] == 1


def test_report_config_excludes_output_path():
    a = RunConfig(report="x.json").canonical()
    assert "report" not in a


def test_unknown_suite_in_library():
    with pytest.raises(ConfigError):
        run_suite(RunConfig(suite="nosuch"))


def test_baxterize_too_few_samples():
    assert main(["baxterize", "--symmetry", "flip", "--samples", "3"]) == 2


def test_baxterize_cli(capsys):
    assert main(["baxterize", "--symmetry", "jordan", "--a", "1", "--b", "0", "--samples", "7"]) == 0
    out = capsys.readouterr().out
    assert "braid relation on 343 points: pass" in out
    assert "phi(2, 1/3)" in out


def test_report_run_records_errors_and_skips():
    rep = Report(config={})

    def boom():
        raise ZeroDivisionError("x")

    def skip():
        raise Skip("n/a")

    rep.run("a", "", boom)
    rep.run("b", "", skip)
    rep.run("c", "", lambda: {"passed": False}, expected=NEGATIVE)
    st = [r.status for r in rep.records]
    assert st == ["fail", "skipped", "pass"]
    assert rep.records[0].details["error"] == "ZeroDivisionError"
    assert "PASS (fails as expected)" in rep.summary_lines()[2]


def test_baxterize_flavor_and_report(tmp_path):
    rp = tmp_path / "b.json"
    assert main(["baxterize", "--symmetry", "standard", "--flavor", "trig-multiplicative", "--report", str(rp)]) == 0
    data = json.loads(rp.read_text())
    assert data["config"]["flavor"] == "trig-multiplicative"
    assert [r["status"] for r in data["records"]] == ["pass", "pass"]
    assert data["records"][0]["details"]["points"] == 343


def test_baxterize_flavor_mismatch():
    assert main(["baxterize", "--symmetry", "flip", "--flavor", "trig-multiplicative"]) == 2
