import json
import subprocess
import sys

import pytest

from qcapelli.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_spectrum_example(capsys):
    code, out = run(capsys, "spectrum", "--n", "1", "--nu", "1", "--lambda", "3")
    assert code == 0
    doc = json.loads(out)
    rec = doc["records"][0]
    assert rec["lhs_q"] == rec["rhs_q"] == "1 - q^6"
    assert rec["eigenvalue"] == [[0, "1"], [12, "-1"]]
    assert doc["summary"] == {"pass": 1, "fail": 0, "skipped": 0}


def test_spectrum_csv(capsys):
    code, out = run(capsys, "spectrum", "--n", "1", "--nu", "1", "--lambda", "3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "claim,params,status,lhs,rhs,detail"
    assert lines[1].startswith("spectrum,") and ",pass,1 - q^6,1 - q^6," in lines[1]


def test_verify_theorem2(capsys):
    code, out = run(capsys, "verify", "theorem2", "--n", "2")
    assert code == 0
    assert json.loads(out)["summary"]["fail"] == 0


def test_verify_lemmas34(capsys):
    code, out = run(capsys, "verify", "lemmas34", "--n", "2", "--max-nu", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc["summary"]["pass"] > 0 and doc["summary"]["fail"] == 0


def test_verify_theorem1_small(capsys):
    code, out = run(capsys, "verify", "theorem1", "--n", "2", "--max-nu", "2", "--max-lambda", "2")
    assert code == 0
    recs = json.loads(out)["records"]
    assert len(recs) == 4 * 4
    assert {r["params"]["nu"] for r in recs} == {"0,0", "1,0", "2,0", "1,1"}


def test_verify_interpolation(capsys):
    code, _ = run(capsys, "verify", "interpolation", "--n", "2", "--max-lambda", "2")
    assert code == 0


def test_limit(capsys):
    code, out = run(capsys, "limit", "--n", "2", "--nu", "1,0", "--lambda", "2,1")
    assert code == 0
    assert json.loads(out)["records"][0]["status"] == "pass"


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["spectrum", "--n", "2", "--nu", "1,2", "--lambda", "0,0"])
    assert exc.value.code == 2


def test_failure_exit_1(capsys, monkeypatch):
    import qcapelli.cli as cli

    monkeypatch.setattr(cli, "rhs_theorem1", lambda nu, lam: cli.RationalFunction.coerce(7))
    code, out = run(capsys, "spectrum", "--n", "1", "--nu", "1", "--lambda", "1")
    assert code == 1
    rec = json.loads(out)["records"][0]
    assert rec["status"] == "fail" and "lhs" in rec and "rhs" in rec


def test_reports_are_deterministic(capsys):
    argv = ["verify", "theorem1", "--n", "1", "--max-nu", "3", "--max-lambda", "3"]
    _, first = run(capsys, *argv)
    _, second = run(capsys, *argv)
    assert first == second


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out = run(capsys, "spectrum", "--n", "1", "--nu", "1", "--lambda", "2", "--out", str(target))
    assert code == 0
    assert json.loads(target.read_text())["records"][0]["rhs_q"] == "1 - q^4"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qcapelli", "spectrum", "--n", "1", "--nu", "2", "--lambda", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["summary"]["pass"] == 1
