import json
import subprocess
import sys


def run_cli(*args, stdin=None):
    proc = subprocess.run(
        [sys.executable, "-m", "sympfaff.cli", *args],
        capture_output=True,
        text=True,
        input=stdin,
    )
    return proc


def test_count_example():
    proc = run_cli("count", "--n", "4", "--degree", "1", "--report", "json")
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["results"] == [{"count": 5}]
    assert report["command"] == "count"


def test_dim_example():
    proc = run_cli("dim", "--n", "4", "--degree", "2", "--report", "json")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"] == [{"dim": 14}]


def test_dim_check_agrees():
    proc = run_cli("dim", "--n", "4", "--degree", "2", "--check", "--report", "json")
    assert proc.returncode == 0
    res = json.loads(proc.stdout)["results"][0]
    assert res["agree"] and res["dim"] == res["count"] == 14


def test_verify_exit_zero():
    proc = run_cli("verify", "--n", "4", "--points", "3", "--seed", "1", "--report", "json")
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["failures"] == []
    assert report["results"][0]["pass"] is True


def test_verify_byte_identical():
    args = ("verify", "--n", "4", "--points", "2", "--seed", "7", "--report", "json")
    out1 = run_cli(*args).stdout
    out2 = run_cli(*args).stdout
    assert out1 == out2


def test_sample_deterministic_and_skew():
    args = ("sample", "--n", "4", "--seed", "5", "--report", "json")
    out1 = run_cli(*args)
    assert out1.returncode == 0
    m = json.loads(out1.stdout)["results"][0]["matrix"]
    assert len(m) == 4
    assert m[0][0] == "0"
    assert out1.stdout == run_cli(*args).stdout


def test_straighten_round_trip():
    combo = json.dumps([{"coeff": "1", "tableau": [[1, -1]]}])
    proc = run_cli("straighten", "--n", "4", "--report", "json", stdin=combo)
    assert proc.returncode == 0
    out = json.loads(proc.stdout)["results"][0]["combo"]
    assert out == [{"coeff": "1", "tableau": [[-2, 2]]}]


def test_straighten_exchange_law():
    combo = json.dumps([{"coeff": "1", "tableau": [[1, -1]]}])
    proc = run_cli(
        "straighten", "--n", "4", "--law", "exchange", "--report", "json", stdin=combo
    )
    assert proc.returncode == 0
    out = json.loads(proc.stdout)["results"][0]["combo"]
    # exchange straightening alone does not touch an already-standard row
    assert out == [{"coeff": "-1", "tableau": [[-1, 1]]}]


def test_enumerate_shape():
    proc = run_cli("enumerate", "--n", "4", "--shape", "2,2", "--report", "json")
    assert proc.returncode == 0
    res = json.loads(proc.stdout)["results"][0]
    assert res["count"] == 14


def test_chart_command():
    proc = run_cli("chart", "--n", "4", "--seed", "2", "--count", "2", "--report", "json")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"][0]["pass"] is True


def test_usage_errors_exit_two():
    assert run_cli("dim", "--n", "5", "--degree", "1").returncode == 2
    assert run_cli("chart", "--n", "6", "--seed", "0").returncode == 2
    assert run_cli("straighten", "--n", "4", stdin="not json").returncode == 2
    assert run_cli("enumerate", "--n", "4").returncode == 2


def test_timing_flag_adds_field():
    proc = run_cli("count", "--n", "4", "--degree", "0", "--report", "json", "--timing")
    report = json.loads(proc.stdout)
    assert "timing" in report
