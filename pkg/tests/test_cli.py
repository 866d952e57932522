import json
import subprocess
import sys

import pytest

from sl2cohom.cli import dump_parsed_table, main, parse_table_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(out):
    return [line.split(" = ", 1)[1] for line in out.splitlines() if line.startswith("H^") and " = " in line]


def test_table_sl2zp_13(capsys):
    code, out, _ = run(capsys, "table", "--group", "sl2zp", "--p", "13", "--degrees", "0..5")
    assert code == 0
    assert rows(out) == ["Z", "0", "Z + Z/12", "Z/6", "Z/2 + Z/12", "Z/6"]
    assert out.rstrip().endswith("period: 2 above degree 2")


def test_table_gamma0_2(capsys):
    code, out, _ = run(capsys, "table", "--group", "gamma0", "--p", "2", "--degrees", "0..3")
    assert code == 0
    assert rows(out) == ["Z", "Z", "Z/4", "Z/2"]


def test_table_sl2z(capsys):
    code, out, _ = run(capsys, "table", "--group", "sl2z", "--degrees", "0..2")
    assert code == 0
    assert rows(out) == ["Z", "0", "Z/12"]


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--group", "gamma0", "--p", "13", "--degrees", "0..4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["p"] == 13 and data["group"] == "gamma0"
    assert data["cohomology"][4] == {"degree": 4, "free_rank": 0, "invariant_factors": [6, 12]}
    assert data["cohomology"][1] == {"degree": 1, "free_rank": 1, "invariant_factors": []}


@pytest.mark.parametrize("argv", [
    ("table", "--group", "sl2zp", "--p", "11", "--degrees", "0..9", "--format", "json"),
    ("table", "--group", "sl2z", "--degrees", "3..6", "--format", "json"),
    ("table", "--group", "pgamma0", "--p", "2", "--degrees", "0..4", "--format", "json"),
])
def test_json_roundtrip(capsys, argv):
    _, out, _ = run(capsys, *argv)
    assert dump_parsed_table(parse_table_json(out)) == out.rstrip("\n")


@pytest.mark.parametrize("argv", [
    ("table", "--group", "sl2zp", "--p", "12"),
    ("table", "--group", "sl2zp"),
    ("table", "--group", "sl2zp", "--p", "13", "--degrees", "5..2"),
    ("table", "--group", "sl2zp", "--p", "13", "--degrees", "a..b"),
    ("table", "--group", "pgamma0", "--p", "3"),
    ("decompose", "--p", "3", "--k", "4"),
    ("decompose", "--p", "103", "--k", "2"),
    ("verify", "--p", "12"),
    ("verify", "--p", "13", "--checks", "nonsense"),
    ("scan", "--from", "5", "--to", "3"),
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["decompose", "--p", "5", "--k", "3"])
    assert exc.value.code == 2


def test_decompose_p5_k4(capsys):
    code, out, _ = run(capsys, "decompose", "--p", "5", "--k", "4")
    assert code == 0
    body = [line.split() for line in out.splitlines()[2:-1]]
    assert len(body) == 4
    assert sorted(r[3] for r in body if r[2] == "4") == ["2", "3"]
    assert out.splitlines()[-1].startswith("PASS")


def test_decompose_p7_k6_json(capsys):
    code, out, _ = run(capsys, "decompose", "--p", "7", "--k", "6", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["orbits"]) == 4
    assert sorted(o["fixed_root"] for o in data["orbits"] if o["stabilizer_order"] == 6) == [3, 5]
    assert data["status"] == "PASS"


def test_decompose_p11_k2(capsys):
    code, out, _ = run(capsys, "decompose", "--p", "11", "--k", "2")
    assert code == 0
    assert len(out.splitlines()) == 2 + 12 + 1
    assert out.splitlines()[-1].startswith("PASS")


def test_verify_p13(capsys):
    code, out, _ = run(capsys, "verify", "--p", "13")
    assert code == 0
    assert "FAIL" not in out


def test_verify_p101_two_checks(capsys):
    code, out, _ = run(capsys, "verify", "--p", "101", "--checks", "n-of-p,euler")
    assert code == 0
    assert "summary: 2 passed, 0 failed, 0 skipped" in out


def test_verify_failure_exit_1(capsys, monkeypatch):
    from sl2cohom import checks
    monkeypatch.setattr(checks.tables, "n_of_p", lambda p: -1)
    code, out, _ = run(capsys, "verify", "--p", "13", "--checks", "n-of-p")
    assert code == 1


def test_scan_closed_form(capsys):
    code, out, _ = run(capsys, "scan", "--from", "5", "--to", "499", "--checks", "closed-form")
    assert code == 0
    assert "0 failed" in out.splitlines()[-1]


def test_scan_skips_above_bound(capsys):
    code, out, _ = run(capsys, "scan", "--from", "100", "--to", "110", "--checks", "brute-force", "--bound", "101")
    assert code == 0
    assert "p=101" in out and "p=103" in out
    assert out.splitlines()[-1] == "summary: 4 primes, 5 passed, 0 failed, 15 skipped"


def test_output_deterministic(capsys):
    a = run(capsys, "decompose", "--p", "13", "--k", "6")
    b = run(capsys, "decompose", "--p", "13", "--k", "6")
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sl2cohom", "table", "--group", "sl2z", "--degrees", "0..1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "H^1 = 0" in proc.stdout
