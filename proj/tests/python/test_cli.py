"""End-to-end checks of the gbihom command-line tool."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("GBIHOM_CLI", "gbihom")
COMMANDS = [["validate"], ["support"], ["classes", "--verify-witnesses"], ["decompose", "--bases"],
            ["simplicity", "--oracle"]]


def run(*args):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, timeout=120)
    return proc.returncode, proc.stdout, proc.stderr


def machine(*args):
    code, out, _ = run(*args, "--format", "machine")
    return code, json.loads(out)


@pytest.fixture
def emit(tmp_path):
    def _emit(name):
        path = tmp_path / f"{name}.json"
        code, _, _ = run("catalog", "emit", name, "-o", str(path))
        assert code == 0
        return path
    return _emit


def test_catalog_list():
    code, rep = machine("catalog", "list")
    assert code == 0
    names = [e["name"] for e in rep["result"]["entries"]]
    assert "pauli_f5" in names and "block_diagonal_pair_f5" in names


def test_pauli_simplicity_with_oracle(emit):
    code, rep = machine("simplicity", "--oracle", str(emit("pauli_f5")))
    assert code == 0
    assert rep["result"]["graded_simple"] == "Yes"
    assert rep["result"]["oracle"]["agrees_with_criterion"] is True
    assert rep["input"]["sha256"] and "timing_ms" not in rep


def test_block_decomposition(emit):
    code, rep = machine("decompose", str(emit("block_diagonal_pair_f5")))
    assert code == 0
    assert rep["result"]["ideal_count"] == 2
    assert rep["result"]["direct"] is True


def test_classes_witnesses_verify(emit):
    code, rep = machine("classes", "--verify-witnesses", str(emit("twisted_pauli_f5")))
    assert code == 0
    assert "verified\": false" not in json.dumps(rep)


@pytest.mark.parametrize("name", ["pauli_f5", "corner_with_annihilator_f5", "nilpotent_pair_f5"])
def test_reports_are_byte_identical(emit, name):
    path = str(emit(name))
    for cmd in COMMANDS:
        first = run(*cmd, "--format", "machine", path)
        assert first == run(*cmd, "--format", "machine", path)


def test_timing_is_opt_in(emit):
    _, rep = machine("validate", "--timing", str(emit("pauli_f5")))
    assert "timing_ms" in rep


def test_missing_path_exits_2(tmp_path):
    code, _, _ = run("validate", str(tmp_path / "absent.json"))
    assert code == 2


def test_unknown_catalog_name_exits_2():
    assert run("catalog", "emit", "no_such_entry")[0] == 2


def test_schema_violation_exits_3(tmp_path, emit):
    doc = json.loads(emit("pauli_f5").read_text())
    doc["components"][1]["basis"][0][0] = ["1"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, rep = machine("validate", str(bad))
    assert code == 3
    assert rep["error"]["location"].startswith("$.components[1].basis[0]")


def test_unknown_key_strict_and_lenient(tmp_path, emit):
    doc = json.loads(emit("pauli_f5").read_text())
    doc["comment"] = "x"
    path = tmp_path / "extra.json"
    path.write_text(json.dumps(doc))
    assert machine("validate", str(path))[0] == 3
    code, rep = machine("validate", "--lenient", str(path))
    assert code == 0
    assert rep["warnings"]


def test_non_commuting_automorphisms_exit_1(tmp_path, emit):
    doc = json.loads(emit("pauli_f5").read_text())
    doc["alpha"] = [[0, 1], [1, 0]]
    doc["beta"] = [[1, 0], [1, 1]]
    path = tmp_path / "noncommuting.json"
    path.write_text(json.dumps(doc))
    code, rep = machine("validate", str(path))
    assert code == 1
    checks = {c["name"]: c for c in rep["validation"]["checks"]} if "validation" in rep else \
        {c["name"]: c for c in rep["result"]["checks"]}
    assert checks["alpha_beta_commute"]["passed"] is False
    assert "(1,0)" in checks["alpha_beta_commute"]["witness"]


def test_human_format(emit):
    code, out, _ = run("support", str(emit("pauli_f5")))
    assert code == 0
    assert "symmetric: true" in out
