import json

import numpy as np
import pytest

from orthofermi.cli import EXIT_FAIL, EXIT_IO, EXIT_PASS, main
from orthofermi.serialize import read_rep_file


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


def canonical_file(tmp_path, capsys, p=2):
    path = tmp_path / "canonical.json"
    code, _ = run(capsys, "canonical", "--p", str(p), "--out", str(path))
    assert code == EXIT_PASS
    return path


# -- canonical ------------------------------------------------------------------

def test_canonical_writes_the_expected_matrices(tmp_path, capsys):
    path = canonical_file(tmp_path, capsys, p=2)
    rep, unit = read_rep_file(path)
    assert rep.p == 2 and rep.dim == 3
    e12 = np.zeros((3, 3)); e12[0, 1] = 1
    e13 = np.zeros((3, 3)); e13[0, 2] = 1
    assert np.array_equal(rep.c[0], e12)
    assert np.array_equal(rep.c[1], e13)
    assert np.array_equal(unit, np.eye(3))


def test_canonical_order_one(tmp_path, capsys):
    path = canonical_file(tmp_path, capsys, p=1)
    rep, _ = read_rep_file(path)
    assert rep.dim == 2 and len(rep.c) == 1


def test_canonical_unwritable_path_is_io_failure(tmp_path, capsys):
    code, _ = run(capsys, "canonical", "--p", "2", "--out",
                  str(tmp_path / "missing-dir" / "rep.json"))
    assert code == EXIT_IO


# -- verify -----------------------------------------------------------------------

def test_verify_canonical_passes(tmp_path, capsys):
    path = canonical_file(tmp_path, capsys)
    code, doc = run_json(capsys, "verify", str(path))
    assert code == EXIT_PASS
    assert all(doc["verdicts"].values())
    assert all(v == 0.0 for v in doc["residuals"].values())


def test_verify_reports_injected_perturbation(tmp_path, capsys):
    path = canonical_file(tmp_path, capsys)
    doc = json.loads(path.read_text())
    doc["matrices"][0][2][2] = [1e-3, 0.0]
    path.write_text(json.dumps(doc))
    code, report = run_json(capsys, "verify", str(path))
    assert code == EXIT_FAIL
    worst = max(report["residuals"].values())
    assert 5e-4 < worst < 5e-3


def test_verify_zero_rep_with_inferred_unit(tmp_path, capsys):
    path = tmp_path / "zero.json"
    zero = [[[0.0, 0.0]] * 3 for _ in range(3)]
    path.write_text(json.dumps({"schema_version": "orthofermion-rep/1", "p": 2,
                                "dim": 3, "matrices": [zero, zero]}))
    code, doc = run_json(capsys, "verify", str(path))
    assert code == EXIT_PASS
    assert doc["payload"]["unit"] == "inferred from relations"


def test_verify_malformed_file_is_parse_failure(tmp_path, capsys):
    path = tmp_path / "garbage.json"
    path.write_text("]]]")
    code, _ = run(capsys, "verify", str(path))
    assert code == EXIT_IO


# -- decompose ---------------------------------------------------------------------

def test_decompose_round_trip_through_files(tmp_path, capsys):
    rep_path = tmp_path / "scrambled.json"
    code, _ = run(capsys, "random-rep", "--p", "2", "--copies", "2", "--trivial", "2",
                  "--seed", "7", "--out", str(rep_path))
    assert code == EXIT_PASS
    code, doc = run_json(capsys, "decompose", str(rep_path))
    assert code == EXIT_PASS
    assert doc["payload"]["multiplicity"] == 2
    assert doc["payload"]["trivial_dim"] == 2


def test_decompose_canonical_and_zero(tmp_path, capsys):
    path = canonical_file(tmp_path, capsys)
    code, doc = run_json(capsys, "decompose", str(path))
    assert code == EXIT_PASS
    assert (doc["payload"]["multiplicity"], doc["payload"]["trivial_dim"]) == (1, 0)

    zero_path = tmp_path / "zero.json"
    zero = [[[0.0, 0.0]] * 5 for _ in range(5)]
    zero_path.write_text(json.dumps({"schema_version": "orthofermion-rep/1", "p": 1,
                                     "dim": 5, "matrices": [zero]}))
    code, doc = run_json(capsys, "decompose", str(zero_path))
    assert code == EXIT_PASS
    assert (doc["payload"]["multiplicity"], doc["payload"]["trivial_dim"]) == (0, 5)


def test_decompose_emits_basis(tmp_path, capsys):
    rep_path = tmp_path / "rep.json"
    run(capsys, "random-rep", "--p", "1", "--copies", "1", "--trivial", "1",
        "--seed", "4", "--out", str(rep_path))
    basis_path = tmp_path / "basis.json"
    code, _ = run(capsys, "decompose", str(rep_path), "--emit-basis", str(basis_path))
    assert code == EXIT_PASS
    doc = json.loads(basis_path.read_text())
    assert doc["schema_version"] == "orthofermion-basis/1"
    assert doc["dim"] == 3


def test_decompose_rejects_perturbed_input(tmp_path, capsys):
    path = canonical_file(tmp_path, capsys)
    doc = json.loads(path.read_text())
    doc["matrices"][0][2][2] = [1e-3, 0.0]
    path.write_text(json.dumps(doc))
    code, _ = run(capsys, "decompose", str(path))
    assert code == EXIT_FAIL


# -- random-rep ----------------------------------------------------------------------

def test_random_rep_files_are_byte_identical_for_a_seed(tmp_path, capsys):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "random-rep", "--p", "2", "--copies", "3", "--trivial", "0",
        "--seed", "1", "--out", str(p1))
    run(capsys, "random-rep", "--p", "2", "--copies", "3", "--trivial", "0",
        "--seed", "1", "--out", str(p2))
    assert p1.read_bytes() == p2.read_bytes()
    rep, _ = read_rep_file(p1)
    assert rep.dim == 9


def test_random_rep_passes_verify(tmp_path, capsys):
    path = tmp_path / "rep.json"
    run(capsys, "random-rep", "--p", "3", "--copies", "2", "--trivial", "1",
        "--seed", "7", "--out", str(path))
    code, _ = run(capsys, "verify", str(path))
    assert code == EXIT_PASS


# -- osusy ---------------------------------------------------------------------------

def test_osusy_report_contents(tmp_path, capsys):
    code, doc = run_json(capsys, "osusy", "--p", "2", "--levels", "4")
    assert code == EXIT_PASS
    spectrum = doc["payload"]["spectrum"]
    assert [row["E"] for row in spectrum] == [0.0, 1.0, 2.0, 3.0]
    assert [row["dim"] for row in spectrum] == [3, 3, 3, 3]
    assert [row["copies"] for row in spectrum] == [0, 1, 1, 1]
    assert all(doc["verdicts"].values())


def test_osusy_every_positive_level_has_full_degeneracy(capsys):
    code, doc = run_json(capsys, "osusy", "--p", "3", "--levels", "3")
    assert code == EXIT_PASS
    assert doc["payload"]["dim"] == 12
    for row in doc["payload"]["spectrum"]:
        if row["E"] > 0:
            assert row["dim"] == 4


def test_osusy_order_one_notes_skipped_sum_rule(capsys):
    code, doc = run_json(capsys, "osusy", "--p", "1", "--levels", "2")
    assert code == EXIT_PASS
    assert any("sum rule omitted for p = 1" in note for note in doc["payload"]["notes"])
    assert not any("sum_k" in name for name in doc["residuals"])


def test_osusy_writes_system_file(tmp_path, capsys):
    out = tmp_path / "system.json"
    code, _ = run(capsys, "osusy", "--p", "1", "--levels", "2", "--out", str(out))
    assert code == EXIT_PASS
    doc = json.loads(out.read_text())
    assert doc["schema_version"] == "orthofermion-osusy/1"
    assert doc["dim"] == 4
    assert len(doc["Q"]) == 1


# -- ladder --------------------------------------------------------------------------

def test_ladder_report_is_exact(capsys):
    code, doc = run_json(capsys, "ladder", "--p", "4")
    assert code == EXIT_PASS
    assert all(v == 0.0 for v in doc["residuals"].values())


def test_ladder_cyclic_matrix_is_a_permutation(capsys):
    code, doc = run_json(capsys, "ladder", "--p", "2")
    assert code == EXIT_PASS
    f = np.array(doc["payload"]["F"])[:, :, 0]
    assert np.array_equal(f, np.array([[0, 1, 0], [0, 0, 1], [1, 0, 0]]))


def test_ladder_order_one_nilpotency(capsys):
    code, doc = run_json(capsys, "ladder", "--p", "1")
    assert code == EXIT_PASS
    assert doc["residuals"]["L^{p+1} = 0"] == 0.0


# -- report contract -------------------------------------------------------------------

def test_reports_are_deterministic(capsys):
    _, first = run(capsys, "osusy", "--p", "2", "--levels", "3", "--json")
    _, second = run(capsys, "osusy", "--p", "2", "--levels", "3", "--json")
    assert first == second


def test_every_verdict_has_residual_and_tolerance(capsys):
    _, doc = run_json(capsys, "osusy", "--p", "2", "--levels", "4")
    for name in doc["verdicts"]:
        assert name in doc["residuals"]
        assert name in doc["tolerances"]


def test_table_and_json_come_from_the_same_report(tmp_path, capsys):
    path = canonical_file(tmp_path, capsys)
    code, table = run(capsys, "verify", str(path))
    assert code == EXIT_PASS
    assert "overall: PASS" in table
    code, doc = run_json(capsys, "verify", str(path))
    for name in doc["residuals"]:
        assert name in table
