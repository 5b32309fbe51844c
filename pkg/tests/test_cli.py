import json
import subprocess
import sys

import pytest

from wallcount import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_sequence_determinant(capsys):
    code, out, _ = run(capsys, "sequence", "--family", "fbar", "-m", "3", "--n-max", "2", "--method", "determinant")
    assert code == 0
    assert out.strip().splitlines()[-1] == "2 281"


def test_sequence_q_genfun(capsys):
    code, out, _ = run(capsys, "sequence", "--family", "q", "-k", "1", "-l", "1", "--n-max", "3", "--method", "genfun")
    assert code == 0
    assert [line.split()[1] for line in out.splitlines()] == ["1", "2", "5", "14"]


def test_sequence_fr_zero(capsys):
    code, out, _ = run(capsys, "sequence", "--family", "fr", "-k", "2", "-l", "2", "-r", "2", "--n-max", "0")
    assert code == 0
    assert out.strip() == "0 1"


def test_sequence_formats(capsys):
    code, out, _ = run(capsys, "sequence", "--family", "fbar", "-m", "2", "--n-max", "3", "--format", "json")
    data = json.loads(out)
    assert data == {"family": "fbar", "params": {"m": 2}, "method": "genfun", "values": ["1", "3", "22", "211"]}
    code, out, _ = run(capsys, "sequence", "--family", "fbar", "-m", "2", "--n-max", "3", "--offset", "1")
    assert out.splitlines()[0] == "1 1" and out.splitlines()[-1] == "4 211"
    code, out, _ = run(capsys, "sequence", "--family", "fbar", "-m", "2", "--n-max", "2", "--format", "table")
    assert out.splitlines() == ["0 | 1", "1 | 3", "2 | 22"]


def test_sequence_large_values_are_exact(capsys):
    code, out, _ = run(capsys, "sequence", "--family", "fbar", "-m", "4", "--n-max", "12")
    last = out.splitlines()[-1].split()[1]
    assert last.isdigit() and len(last) > 20


@pytest.mark.parametrize(
    "argv",
    [
        ["sequence", "--family", "fbar", "--n-max", "2"],
        ["sequence", "--family", "fbar", "-m", "0", "--n-max", "2"],
        ["sequence", "--family", "fr", "-k", "2", "-l", "2", "-r", "3", "--n-max", "2"],
        ["sequence", "--family", "q", "-k", "1", "--n-max", "2"],
        ["sequence", "--family", "fbar", "-m", "2", "--n-max", "-1"],
        ["sequence", "--family", "fbar", "-m", "2", "--n-max", "2", "--method", "nope"],
        ["sequence", "--family", "fbar", "-m", "1", "--n-max", "2", "--method", "recursion"],
    ],
)
def test_sequence_rejects_bad_input(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code != 0
    assert err.startswith("error:")


def test_crosscheck_fbar_all_methods(capsys):
    code, out, _ = run(capsys, "crosscheck", "--family", "fbar", "--m-max", "3", "--n-max", "3", "--extra", "4:2")
    assert code == 0
    assert "MISMATCH" not in out
    assert out.strip().endswith("all methods agree")
    header = out.splitlines()[0].split()
    for method in ["tableaux", "dp", "determinant", "recursion", "genfun", "multisection"]:
        assert method in header


def test_crosscheck_fr(capsys):
    code, out, _ = run(capsys, "crosscheck", "--family", "fr", "--n-max", "5", "--methods", "dp,genfun")
    assert code == 0


def test_crosscheck_q(capsys):
    code, _, _ = run(capsys, "crosscheck", "--family", "q", "--k-max", "2", "--l-max", "2", "--n-max", "3")
    assert code == 0


def test_crosscheck_catches_corruption(capsys, monkeypatch):
    good = cli.METHODS["fbar"]["determinant"]

    def corrupted(params, n_max):
        vals = good(params, n_max)
        if params["m"] == 3 and n_max >= 2:
            vals[2] += 1
        return vals

    monkeypatch.setitem(cli.METHODS["fbar"], "determinant", corrupted)
    code, out, _ = run(capsys, "crosscheck", "--family", "fbar", "--m-max", "3", "--n-max", "3")
    assert code == 1
    last = out.strip().splitlines()[-1]
    assert last.startswith("first mismatch: family=fbar m=3 n=2")
    assert "determinant=282" in last


def test_crosscheck_unknown_method(capsys):
    code, _, err = run(capsys, "crosscheck", "--family", "q", "--methods", "determinant")
    assert code == 2


def test_identities_default(capsys):
    code, out, _ = run(capsys, "identities")
    assert code == 0
    assert out.strip().endswith("0 failed")
    assert not any(line.startswith("FAIL") for line in out.splitlines())


def test_identities_tutte(capsys):
    code, out, _ = run(capsys, "identities", "--only", "tutte", "--max-len", "8")
    assert code == 0
    assert "PASS    tutte-append-recursion [max_len=8] (511 paths)" in out


def test_identities_bijection(capsys):
    code, out, _ = run(capsys, "identities", "--only", "bijection", "-m", "5")
    assert code == 0
    assert out.count("PASS    bijection") == 5


def test_identities_failure_exit(capsys, monkeypatch):
    monkeypatch.setattr(cli.tutte, "verify_append_recursion", lambda p: len(p) < 3)
    code, out, _ = run(capsys, "identities", "--only", "tutte", "--max-len", "4")
    assert code == 1
    assert "FAIL" in out


def test_identities_deterministic(capsys):
    first = run(capsys, "identities", "--only", "lemmas", "--bound", "5")
    second = run(capsys, "identities", "--only", "lemmas", "--bound", "5")
    assert first == second


def test_tableaux_and_tutte_commands(capsys):
    code, out, _ = run(capsys, "tableaux", "-m", "2", "-n", "1")
    assert code == 0 and out.strip().endswith("3 tableaux")
    code, out, _ = run(capsys, "tableaux", "-m", "3", "--walls", "")
    assert out.strip().endswith("5 tableaux")
    code, out, _ = run(capsys, "tutte", "--path", "NE")
    assert out.strip() == "z + y"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "wallcount", "sequence", "--family", "q", "-k", "1", "-l", "1", "--n-max", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.split() == ["0", "1", "1", "2", "2", "5"]
