import csv
import io
import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest

from sumgrowth import cli

SCHEMAS = Path(__file__).resolve().parent.parent / "docs" / "schemas"


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def run(capsys, *argv):
    try:
        rc = cli.main([str(a) for a in argv])
    except SystemExit as exc:  # argparse rejects malformed arguments itself
        rc = exc.code
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_schemas_are_valid():
    for path in SCHEMAS.glob("*.schema.json"):
        jsonschema.Draft202012Validator.check_schema(json.loads(path.read_text()))


@pytest.mark.parametrize("name,argv", [
    ("bounds", ["bounds", 100, 5]),
    ("bounds", ["bounds", 220, 3]),
    ("bounds", ["bounds", 1, 4]),
    ("theta", ["theta", 48, 12]),
    ("theta", ["theta", "869/100", 5]),
    ("theta-scan", ["theta-scan", "--h", 6, "--ge", 2, "--xmax", 5000]),
    ("theta-scan", ["theta-scan", "--h", 5, "--ge", 2, "--xmax", 1000]),
    ("theta-region", ["theta-region", "--x", 48, "--h-lo", 10, "--h-hi", 13, "--ge", 2]),
    ("theta-argmax", ["theta-argmax", "--x", 100]),
    ("theta-limit", ["theta-limit", "--h", 6]),
    ("sumset", ["sumset", "--set", "0,1,5,8,49", "--max-h", 6, "--check-bounds"]),
    ("sumset", ["sumset", "--set", "(0,0),(1,2),(3,1)", "--max-h", 4, "--check-bounds"]),
    ("sumset", ["sumset", "--set", "0,1,3", "--mod", 7, "--max-h", 5]),
    ("search", ["search", "--h", 2, "--i", 3, "--m", 6, "--max-elem", 30, "--size", 3]),
    ("classes", ["classes", "--set", "0,1,2", "--deg", 2]),
    ("classes", ["classes", "--set", "(0,0),(1,0),(0,1)", "--deg", 2]),
    ("present", ["present", "--set", "0,1,2,4", "--max-deg", 3]),
    ("hilbert", ["hilbert", "--vars", 5, "--ideal", "X5^3,X4*X5^2,X3^3*X5^2", "--max-deg", 6]),
    ("verify", ["verify-paper", "--fast", "--json"]),
])
def test_json_outputs_match_schema(capsys, name, argv):
    rc, out, _ = run(capsys, *argv)
    assert rc == 0
    jsonschema.validate(json.loads(out), schema(name))


def test_bounds_json_values(capsys):
    _, out, _ = run(capsys, "bounds", 100, 5)
    rep = json.loads(out)
    text = json.dumps(rep)
    for n in (40, 251, 58, 161, 61, 152):
        assert str(n) in text
    assert rep["x"]["exact"] is False
    _, out, _ = run(capsys, "bounds", 220, 3)
    assert json.loads(out)["x"] == {"lo": "12.000000", "hi": "12.000000", "exact": True}


def test_repr_succ_minprev(capsys):
    assert run(capsys, "repr", 0, 3)[1].strip() == "0"
    assert run(capsys, "repr", 10, 3)[1].strip() == "C(5,3)"
    assert run(capsys, "succ", 100, 5)[1].strip() == "152"
    assert run(capsys, "minprev", 100, 4)[1].strip() == "61"


def test_solvex_output(capsys):
    rc, out, _ = run(capsys, "solvex", 100, 5)
    lo, hi = (Fraction(s) for s in out.split())
    assert rc == 0 and lo < hi and hi - lo < Fraction(1, 10**11)
    # printed digits follow the tolerance; an exact root prints as equal endpoints
    assert [Fraction(s) for s in run(capsys, "solvex", 220, 3)[1].split()] == [12, 12]
    assert run(capsys, "solvex", 220, 3, "--digits", 2)[1].split() == ["12.00", "12.00"]


def test_theta_curve_csv(tmp_path, capsys):
    path = tmp_path / "curve.csv"
    rc, _, _ = run(capsys, "theta-curve", "--x", 48, "--csv", path)
    assert rc == 0
    raw = path.read_bytes().decode()
    rows = list(csv.reader(io.StringIO(raw)))
    assert rows[0] == ["h", "theta_lo", "theta_hi"]
    assert len(rows) == 49
    assert [int(r[0]) for r in rows[1:]] == list(range(1, 49))
    for _, lo, hi in rows[1:]:
        assert len(lo.split(".")[1]) == 6 and Fraction(lo) <= Fraction(hi)
    by_h = {int(r[0]): (Fraction(r[1]), Fraction(r[2])) for r in rows[1:]}
    assert by_h[10][1] < Fraction(1997, 1000) and by_h[12][0] > Fraction(2002, 1000)


def test_theta_curve_stdout_and_digits(capsys):
    rc, out, _ = run(capsys, "theta-curve", "--x", 3, "--digits", 3)
    assert rc == 0
    assert out.splitlines() == ["h,theta_lo,theta_hi", "1,1.000,1.000", "2,1.154,1.155",
                                "3,1.000,1.000"]


def test_verify_paper_deterministic(capsys):
    _, a, _ = run(capsys, "verify-paper", "--fast", "--json")
    _, b, _ = run(capsys, "verify-paper", "--fast", "--json")
    assert a == b
    rep = json.loads(a)
    assert rep["status"] == "pass"
    assert all(c["passed"] for c in rep["claims"])
    _, text, _ = run(capsys, "verify-paper", "--fast")
    assert "PASS" in text


@pytest.mark.parametrize("argv", [
    ["repr", "-1", "3"],
    ["repr", "5", "0"],
    ["solvex", "0", "3"],
    ["solvex", "5", "3", "--tol", "-1"],
    ["bounds", "100", "1"],
    ["theta", "3", "5"],
    ["theta", "abc", "5"],
    ["sumset", "--set", "1,,2", "--max-h", "3"],
    ["sumset", "--set", "(0,0),(1)", "--max-h", "3"],
    ["hilbert", "--vars", "3", "--ideal", "X9", "--max-deg", "2"],
    ["theta-region", "--x", "10", "--h-lo", "5", "--h-hi", "11", "--ge", "2"],
    ["nonsense"],
])
def test_malformed_input_exit_code(capsys, argv):
    rc, out, err = run(capsys, *argv)
    assert rc == cli.EXIT_INPUT
    assert err.strip()


def test_cap_exceeded_exit_code(monkeypatch, capsys):
    monkeypatch.setattr("sumgrowth.sumset.DEFAULT_CAP", 20)
    rc, _, err = run(capsys, "sumset", "--set", "0,1,5,8,49", "--max-h", 6)
    assert rc == cli.EXIT_CAP
    assert "cap" in err


def test_cap_from_environment():
    env = {"SUMGROWTH_CAP": "20", "PATH": ""}
    proc = subprocess.run([sys.executable, "-m", "sumgrowth", "sumset", "--set", "0,1,5,8,49",
                           "--max-h", "6"], capture_output=True, text=True, env=env)
    assert proc.returncode == cli.EXIT_CAP


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sumgrowth", "repr", "100", "5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "C(8,5)+C(7,4)+C(4,3)+C(3,2)+C(2,1)"
