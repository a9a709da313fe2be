import csv
import io
import json
import subprocess
import sys

import pytest

from fibarctan import catalog
from fibarctan.angle import AngleSum
from fibarctan.cli import main
from fibarctan.report import FIELDS


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), stdout=buf)
    return code, buf.getvalue()


def test_list_json():
    code, out = run("list", "--format", "json")
    assert code == 0
    records = json.loads(out)
    assert len(records) == 32
    assert {r["kind"] for r in records} == {"finite", "infinite"}


def test_list_text_and_csv():
    code, out = run("list")
    assert code == 0
    assert "L1-5     (m odd " in out and "L1-6     (m even)" in out
    code, out = run("--format", "csv", "list")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 32 and rows[0]["id"] == "HR63-T5"


def test_verify_finite_ok():
    code, out = run("verify", "T3-c", "--m", "1", "--t", "1")
    assert code == 0 and "verified" in out


def test_verify_parity_error(capsys):
    code, out = run("verify", "T1-a", "--m", "1", "--t", "3")
    assert code == 2 and out == ""
    assert "m even" in capsys.readouterr().err


def test_verify_infinite():
    code, out = run("verify", "I-E4", "--digits", "30", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert list(rec) == FIELDS
    assert rec["status"] == "verified" and rec["t"] is None
    assert rec["lhs"].startswith("0.5535743588970452515085327300")


def test_verify_lemma_with_n():
    code, out = run("verify", "L1-7", "--m", "2", "--n", "1", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert rec["gaussian"] == {"re": "1", "im": "0"} and rec["pi_multiple"] == 0


@pytest.mark.parametrize("argv", [
    ["verify", "NOPE", "--t", "1"],
    ["verify", "HR64"],
    ["verify", "L1-1", "--m", "2", "--n", "0"],
    ["verify", "I-E4", "--t", "3"],
    ["sweep", "T1-b", "--m-range", "5..1", "--t-range", "0..2"],
    ["sweep", "T1-a", "--m-range", "1..1", "--t-range", "0..3"],
    ["sweep", "T1-b", "--t-range", "0..3"],
    ["eval", "T1-b", "--m", "1"],
    ["algebraic", "ALG-11", "--m-range", "2..2", "--n-range", "0..4"],
    ["verify", "HR64", "--t", "1", "--digits", "0"],
    [],
])
def test_usage_errors(argv):
    code, _ = run(*argv)
    assert code == 2


def test_sweep_examples():
    code, out = run("sweep", "T1-b", "--m-range", "1..11", "--t-range", "0..32", "--format", "json")
    summary = json.loads(out)
    assert code == 0 and summary["failed"] == 0 and summary["checked"] == 6 * 33
    code, out = run("sweep", "HR63-T5", "--t-range", "0..64", "--format", "json")
    summary = json.loads(out)
    assert code == 0 and summary["verified"] == 65


def test_sweep_csv_rows():
    code, out = run("sweep", "E33", "--m-range", "0..2", "--n-range", "1..3", "--format", "csv",
                    "--no-timing")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 9
    assert rows[0]["gaussian_re"] == "1" and rows[0]["elapsed_ms"] == "0"


def test_sweep_infinite():
    code, out = run("sweep", "C3-c", "--m-range", "0..4", "--digits", "20", "--format", "json")
    assert code == 0 and json.loads(out)["checked"] == 5


def test_parallel_matches_serial():
    argv = ["sweep", "T2-b", "--m-range", "0..4", "--t-range", "0..6", "--format", "csv", "--no-timing"]
    _, serial = run(*argv)
    _, parallel = run(*argv, "--jobs", "3")
    assert serial == parallel
    argv[5] = "json"
    assert run(*argv)[1] == run(*argv, "--jobs", "2")[1]


def test_json_round_trip():
    for argv in (["verify", "T3-a", "--m", "3", "--t", "4"], ["eval", "C2-a", "--m", "3", "--digits", "25"],
                 ["sweep", "HR64", "--t-range", "0..5"], ["list"]):
        _, out = run(*argv, "--format", "json")
        text = out.rstrip("\n")
        assert json.dumps(json.loads(text)) == text


def test_eval():
    code, out = run("eval", "C1-a", "--m", "2", "--digits", "40", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["terms_used"] > 0 and rec["radius"].endswith(("e-41", "e-42", "e-43"))


def test_algebraic():
    code, out = run("algebraic", "ALG-19", "--m-range", "0..20", "--n-range", "0..20", "--format", "json")
    summary = json.loads(out)
    assert code == 0 and summary["failed"] == 0 and summary["checked"] == 21 * 10


def test_falsified_exit(monkeypatch):
    monkeypatch.setattr(catalog, "_perturbation",
                        lambda inst: catalog.replace(inst, rhs=inst.rhs + AngleSum([catalog._term(1, 1, 7)])))
    code, out = run("verify", "HR64", "--t", "2", "--format", "json")
    assert code == 1 and json.loads(out)["status"] == "falsified"


def test_internal_error_exit(monkeypatch):
    from fibarctan import angle

    monkeypatch.setattr(angle, "MAX_BITS", 8)
    monkeypatch.setattr(angle.reduce_angle, "__kwdefaults__", {"start_bits": 64, "max_bits": 8})
    code, _ = run("verify", "T1-b", "--m", "1", "--t", "2")
    assert code == 3


def test_selftest_quick():
    code, out = run("selftest", "--quick")
    assert code == 0 and "all" in out and "passed" in out


def test_selftest_perturbed(monkeypatch):
    def hook(inst):
        return catalog.replace(inst, lhs=inst.lhs + AngleSum([catalog._term(1, 1, 2)]))

    monkeypatch.setattr(catalog, "_perturbation", hook)
    code, out = run("selftest", "--quick", "--format", "json")
    assert code == 1
    report = json.loads(out.strip().splitlines()[-1])
    assert report["status"] == "failed" and report["counterexample"]["status"] == "falsified"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fibarctan", "verify", "I-E7", "--digits", "20"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "verified" in proc.stdout


def test_selftest_full():
    code, out = run("selftest", "--full", "--format", "json")
    assert code == 0 and json.loads(out)["status"] == "passed"
