import json
import subprocess
import sys

import pytest

from centralizer.cli import main

TWO_JORDAN_BLOCKS = {"ring": {"kind": "Q"}, "matrix": [[1, 1, 0, 0, 0], [0, 1, 1, 0, 0], [0, 0, 1, 0, 0],
                                         [0, 0, 0, 1, 1], [0, 0, 0, 0, 1]]}
STAIRCASE = {"ring": {"kind": "Q"},
             "jordan_type": [{"eigenvalue": "0", "blocks": [{"size": 3}, {"size": 2}, {"size": 1}]}]}
CYCLE = {"ring": {"kind": "Q"}, "group": {"permutations": ["(1 2 3)"]}}
S3_MOD3 = {"ring": {"kind": "GF", "p": 3}, "group": {"permutations": ["(1 2 3)", "(1 2)"]}}


def run(tmp_path, command, instance, *flags):
    src = tmp_path / "in.json"
    out = tmp_path / "out.json"
    src.write_text(instance if isinstance(instance, str) else json.dumps(instance))
    code = main([command, "--input", str(src), "--output", str(out), *flags])
    return code, json.loads(out.read_text())


def test_basis_reference(tmp_path):
    code, rep = run(tmp_path, "basis", TWO_JORDAN_BLOCKS)
    res = rep["results"]
    assert code == 0 and rep["status"] == "pass"
    assert res["rank"] == 9 and res["cartan"] == [[3, 2], [2, 2]]
    assert res["oracle"]["span_equal"] and res["oracle"]["dimension"] == 9
    assert rep["instance"]["n"] == 5


def test_cell_staircase(tmp_path):
    code, rep = run(tmp_path, "cell", STAIRCASE)
    assert code == 0
    assert rep["results"]["simples"] == 3
    assert rep["results"]["quasi_hereditary"]["quasi_hereditary"] is True


def test_frobenius_cycle(tmp_path):
    code, rep = run(tmp_path, "frobenius", CYCLE)
    res = rep["results"]
    assert code == 0
    assert res["free_point"] == 1 and res["system"]["passed"]
    assert res["split"]["E_of_witness_is_identity"]
    assert res["split"]["witness"][0][0] == "1/3"


def test_frobenius_negative_fixture(tmp_path):
    code, rep = run(tmp_path, "frobenius", S3_MOD3)
    assert code == 1 and rep["status"] == "fail"
    assert "frobenius_system" in rep["failed_checks"]
    assert rep["results"]["free_point"] is None
    assert rep["results"]["dimension_obstruction"]
    assert "refused" in rep["results"]["split"]


def test_frobenius_jordan_route(tmp_path):
    code, rep = run(tmp_path, "frobenius", STAIRCASE)
    res = rep["results"]
    assert code == 0 and res["route"] == "jordan"
    assert res["separability"]["passed"] and res["split"]["split"] is False
    assert res["semisimple"]["semisimple"] is False
    assert res["semisimple"]["oracle_radical_dimension"] > 0


def test_structure_reference(tmp_path):
    code, rep = run(tmp_path, "structure", TWO_JORDAN_BLOCKS)
    res = rep["results"]
    assert code == 0
    assert res["radical"]["formula_dimension"] == 7 and res["radical"]["span_equal"]
    assert res["quiver"]["arrows"]


@pytest.mark.parametrize("instance", [
    "{not json",
    {"ring": {"kind": "Q"}},
    {"ring": {"kind": "R"}, "matrix": [[1]]},
    {"ring": {"kind": "GF", "p": 4}, "matrix": [[1]]},
    {"ring": {"kind": "Q"}, "matrix": [[1, 2]]},
    {"ring": {"kind": "Q"}, "matrix": [[1]], "group": {"permutations": ["(1 2)"]}},
    {"ring": {"kind": "Q"}, "group": {"permutations": ["(1 2"]}},
    {"ring": {"kind": "Q"}, "jordan_type": [{"eigenvalue": "0", "blocks": [{"size": 0}]}]},
    {"ring": {"kind": "Q"}, "matrix": [[0, -1], [1, 0]]},
])
def test_input_errors(tmp_path, instance):
    code, rep = run(tmp_path, "basis", instance)
    assert code == 2 and rep["error"]["type"] == "input"


def test_group_needs_group_command(tmp_path):
    code, rep = run(tmp_path, "basis", CYCLE)
    assert code == 2


def test_oracle_over_integers_refused(tmp_path):
    inst = dict(STAIRCASE, ring={"kind": "Z"})
    code, rep = run(tmp_path, "oracle", inst)
    assert code == 2 and "field" in rep["error"]["message"]
    code, rep = run(tmp_path, "basis", inst)
    assert code == 0 and "refused" in rep["results"]["oracle"]


def test_oracle_cap(tmp_path):
    code, rep = run(tmp_path, "oracle", TWO_JORDAN_BLOCKS, "--oracle-cap", "4")
    assert code == 2 and rep["error"]["type"] == "oracle_cap"
    code, rep = run(tmp_path, "basis", TWO_JORDAN_BLOCKS, "--oracle-cap", "4")
    assert code == 0 and "refused" in rep["results"]["oracle"]


def test_no_oracle(tmp_path):
    code, rep = run(tmp_path, "basis", TWO_JORDAN_BLOCKS, "--no-oracle")
    assert code == 0 and "--no-oracle" in rep["results"]["oracle"]["refused"]


def test_oracle_command(tmp_path):
    code, rep = run(tmp_path, "oracle", TWO_JORDAN_BLOCKS)
    res = rep["results"]
    assert code == 0
    assert res["centralizer"]["dimension"] == 9
    assert res["radical"]["dimension"] == 7 and res["simple_count"] == 2
    code, rep = run(tmp_path, "oracle", dict(STAIRCASE, ring={"kind": "GF", "p": 5}))
    assert code == 0 and "refused" in rep["results"]["radical"]


def test_reports_are_byte_identical(tmp_path):
    src = tmp_path / "in.json"
    src.write_text(json.dumps(STAIRCASE))
    outs = [subprocess.run([sys.executable, "-m", "centralizer", cmd, "--input", str(src), "--seed", "7"],
                           capture_output=True, check=False).stdout
            for cmd in ("structure", "structure")]
    assert outs[0] == outs[1] and outs[0]


def test_stdin_and_stdout():
    proc = subprocess.run([sys.executable, "-m", "centralizer", "basis"],
                          input=json.dumps(TWO_JORDAN_BLOCKS), capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["results"]["rank"] == 9
