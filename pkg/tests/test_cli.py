import json

import numpy as np
from click.testing import CliRunner

import goldens
from ptalgebra.cli import build_mul_table, main
from ptalgebra.dpoly import DPoly
from ptalgebra.permutations import Permutation


def run(*args):
    return CliRunner().invoke(main, list(args))


def _perm_of(code):
    if not code:
        return Permutation.identity(3)
    return Permutation.from_cycles(3, [tuple(int(c) for c in code)])


def test_mul_table_symbolic_matches_published_grid():
    result = run("mul-table", "--n", "3", "--symbolic", "--format", "json")
    assert result.exit_code == 0
    table = json.loads(result.output)
    order = [Permutation.parse(s) for s in table["order"]]
    cell_of = {}
    for i, sigma in enumerate(order):
        for j, rho in enumerate(order):
            cell = table["entries"][i][j]
            cell_of[(sigma, rho)] = (
                DPoly(cell["coeff"]), Permutation.parse(cell["perm"]))
    for (row, col), (power, res) in goldens.TABLE_N3.items():
        coeff, perm = cell_of[(_perm_of(row), _perm_of(col))]
        assert coeff == DPoly.d() ** power
        assert perm == _perm_of(res)


def test_mul_table_n2():
    result = run("mul-table", "--n", "2", "--symbolic", "--format", "json")
    table = json.loads(result.output)
    swap = Permutation([2, 1])
    idx = table["order"].index("2,1")
    cell = table["entries"][idx][idx]
    assert DPoly(cell["coeff"]) == DPoly.d()
    assert Permutation.parse(cell["perm"]) == swap


def test_mul_table_fixed_d_evaluates():
    symbolic = build_mul_table(3, None)
    fixed = build_mul_table(3, 2)
    for row_s, row_f in zip(symbolic["entries"], fixed["entries"]):
        for cell_s, cell_f in zip(row_s, row_f):
            assert DPoly(cell_s["coeff"])(2) == cell_f["coeff"]
            assert cell_s["perm"] == cell_f["perm"]


def test_mul_table_text_contains_cells():
    result = run("mul-table", "--n", "3", "--symbolic")
    assert result.exit_code == 0
    assert "d(23)^t" in result.output
    assert "(132)^t" in result.output


def test_mul_table_option_validation():
    assert run("mul-table", "--n", "3").exit_code != 0
    assert run("mul-table", "--n", "3", "--d", "2", "--symbolic").exit_code != 0
    assert run("mul-table", "--n", "7", "--symbolic").exit_code != 0


def test_spectrum_examples():
    # sign label at n = 4, d = 2: eigenvalues 3 (x2) and 0 (x1), rank 2
    result = run("spectrum", "--n", "4", "--d", "2", "--alpha", "1,1",
                 "--format", "json")
    record = json.loads(result.output)
    pairs = {(e["nu"], e["lambda"], e["multiplicity"])
             for e in record["eigenpairs"]}
    assert pairs == {("2,1", 3.0, 2), ("1,1,1", 0.0, 1)}
    assert record["rank"] == 2 and record["theta"] == "1,1,1"

    # trivial label at n = 3, d = 5: eigenvalues 6 and 4
    record = json.loads(run("spectrum", "--n", "3", "--d", "5", "--alpha", "1",
                            "--format", "json").output)
    assert {e["lambda"] for e in record["eigenpairs"]} == {6.0, 4.0}
    assert record["theta"] is None

    # trivial label at n = 4, d = 3: 5 (x1) and 2 (x2)
    record = json.loads(run("spectrum", "--n", "4", "--d", "3", "--alpha", "2",
                            "--format", "json").output)
    assert {(e["lambda"], e["multiplicity"]) for e in record["eigenpairs"]} \
        == {(5.0, 1), (2.0, 2)}


def test_spectrum_matrix_roundtrips():
    record = json.loads(run("spectrum", "--n", "4", "--d", "2", "--alpha", "2",
                            "--format", "json").output)
    matrix = np.array(record["matrix"]).reshape(3, 3)
    assert np.array_equal(matrix, goldens.q_n4_id(2))


def test_irrep_command_e_basis_golden():
    result = run("irrep", "--n", "3", "--d", "4", "--kind", "m", "--alpha", "1",
                 "--basis", "e", "--format", "json")
    record = json.loads(result.output)
    assert record["dimension"] == 2 and record["basis_tag"] == "e"
    published = goldens.phi_n3(4)
    adapter = goldens.REVERSAL_ADAPTER_N3
    for code, expected in published.items():
        key = "()" if not code else f"({code})"
        ours = np.array(record["images"][key]).reshape(2, 2)
        assert np.abs(adapter @ ours @ adapter - expected).max() < 1e-12


def test_irrep_command_n4_e_basis_golden():
    record = json.loads(run("irrep", "--n", "4", "--d", "4", "--kind", "m",
                            "--alpha", "2", "--basis", "e",
                            "--format", "json").output)
    for code, expected in goldens.me_n4_id(4).items():
        ours = np.array(record["images"][f"({code})"]).reshape(3, 3)
        assert np.abs(ours - expected).max() < 1e-12


def test_irrep_command_semi_trivial():
    record = json.loads(run("irrep", "--n", "3", "--d", "3", "--kind", "s",
                            "--nu", "1,1", "--format", "json").output)
    assert record["kind"] == "S" and record["dimension"] == 1
    assert record["images"]["(13)"] == [0.0]
    assert record["images"]["(12)"] == [-1.0]
    assert record["images"]["()"] == [1.0]


def test_irrep_command_validation():
    assert run("irrep", "--n", "3", "--d", "2", "--kind", "m").exit_code != 0
    assert run("irrep", "--n", "3", "--d", "2", "--kind", "s").exit_code != 0


def test_structure_command():
    record = json.loads(run("structure", "--n", "4", "--d", "2", "--oracle",
                            "--format", "json").output)
    assert record["dim_total"] == 14 and record["oracle_dim"] == 14
    assert {(e["alpha"], e["rank"]) for e in record["m_blocks"]} \
        == {("2", 3), ("1,1", 2)}
    record = json.loads(run("structure", "--n", "3", "--d", "3",
                            "--format", "json").output)
    assert record["dim_total"] == 6 and record["oracle_dim"] is None


def test_structure_text_format():
    result = run("structure", "--n", "3", "--d", "2")
    assert result.exit_code == 0
    assert "dim M = 4, dim S = 1, total = 5" in result.output


def test_verify_command_passes_and_exit_codes():
    result = run("verify", "--n", "3", "--d", "2", "--suite", "dims",
                 "--format", "json")
    assert result.exit_code == 0
    reports = json.loads(result.output)
    assert all(r["passed"] for r in reports)
    # impossible tolerance forces failures, counted in the exit code
    result = run("verify", "--n", "3", "--d", "2", "--suite", "dims",
                 "--tol", "1e300")
    assert result.exit_code == 0
    # the f-basis images carry irrational entries, so their homomorphism
    # residual is tiny but nonzero and an impossible tolerance must fail
    result = run("verify", "--n", "3", "--d", "2", "--suite", "irreps",
                 "--tol", "1e-300")
    assert result.exit_code > 0


def test_verify_text_output():
    result = run("verify", "--n", "2", "--d", "2", "--suite", "mul")
    assert "[PASS]" in result.output
    assert result.exit_code == 0


def test_csv_formats():
    result = run("spectrum", "--n", "3", "--d", "2", "--alpha", "1",
                 "--format", "csv")
    lines = result.output.strip().splitlines()
    assert lines[0] == "nu,lambda,multiplicity"
    assert len(lines) == 3
    result = run("structure", "--n", "3", "--d", "2", "--format", "csv")
    assert result.output.splitlines()[0] == "kind,label,size"
