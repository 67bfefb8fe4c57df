import json
import subprocess
import sys


def run_cli(*args, cwd=None):
    return subprocess.run([sys.executable, "-m", "hwprobe.cli", *args],
                          capture_output=True, text=True, cwd=cwd)


def test_catalog_prints_valid_job(tmp_path):
    out = run_cli("catalog", "cusp-hw")
    assert out.returncode == 0
    spec = json.loads(out.stdout)
    assert spec["field"] == 7


def test_run_jobfile_structured(tmp_path):
    jobfile = tmp_path / "job.json"
    run_cli("catalog", "cusp-hw", "--out", str(jobfile))
    # catalog without --run prints the job document; write it to a file
    spec = run_cli("catalog", "cusp-hw").stdout
    jobfile.write_text(spec)
    out = run_cli("run", str(jobfile), "--format", "structured", cwd=tmp_path)
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["anomaly_detected"] is False
    assert doc["tasks"][0]["result"]["verdict"] == "CONJECTURE_HOLDS"


def test_catalog_run_text():
    out = run_cli("catalog", "a1-surface-even-dim", "--run")
    assert out.returncode == 0
    assert "TORSION_PRESENT" in out.stdout


def test_unknown_catalog_is_input_error():
    out = run_cli("catalog", "nope")
    assert out.returncode == 2
    assert "available" in out.stderr


def test_missing_jobfile_is_input_error():
    out = run_cli("run", "/definitely/not/here.json")
    assert out.returncode == 2


def test_invalid_job_is_input_error(tmp_path):
    jobfile = tmp_path / "bad.json"
    jobfile.write_text(json.dumps({"field": 4, "variables": ["x"],
                                   "weights": [1], "tasks": []}))
    out = run_cli("run", str(jobfile))
    assert out.returncode == 2
    assert "prime" in out.stderr


def test_selftest_quick():
    out = run_cli("selftest", "--quick")
    assert out.returncode == 0, out.stdout + out.stderr
    assert "FAIL" not in out.stdout


def test_anomaly_exit_code_writes_certificate(tmp_path, monkeypatch):
    from hwprobe import cli

    class FakeReport:
        anomaly = True
        tasks = [{"op": "hw_check", "status": "ok",
                  "result": {"verdict": "COUNTEREXAMPLE_CANDIDATE",
                             "certificate": {"ring": "r"}}}]

    monkeypatch.setattr(cli, "run_job", lambda spec, seed=0: FakeReport())
    monkeypatch.setattr(cli, "emit",
                        lambda r, format, include_timing: b"{}\n")
    monkeypatch.chdir(tmp_path)
    jobfile = tmp_path / "x.json"
    jobfile.write_text(json.dumps({"field": 7, "variables": ["x"],
                                   "weights": [1], "tasks": []}))
    args = cli.build_parser().parse_args(
        ["run", str(jobfile), "--format", "structured"])
    rc = cli.cmd_run(args)
    assert rc == 1
    assert (tmp_path / cli.ANOMALY_CERTIFICATE_FILE).exists()
