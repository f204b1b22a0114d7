import io
import json
import subprocess
import sys

import pytest

from adjquot.cli import dumps, jsonable, main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, _ = run("--json", *argv)
    return code, json.loads(out), out


def test_info_e7_adjoint():
    code, doc, _ = run_json("info", "E7 adjoint")
    assert code == 0
    assert doc["schema_version"] == 1
    assert len(doc["hilbert_basis"]) == 10 and doc["tangent_dim"] == 10
    assert doc["theorem"]["agrees"] is True


def test_info_a1_sc():
    code, doc, _ = run_json("info", "A1 sc")
    assert doc["hilbert_basis"] == [[1]] and doc["smooth"] is True


def test_info_so8():
    _, doc, _ = run_json("info", "D4 so")
    assert len(doc["hilbert_basis"]) == 5 and doc["smooth"] is False


def test_global_flags_after_subcommand():
    code, doc, _ = run("info", "A2 adjoint", "--json")
    assert code == 0 and json.loads(doc)["group"] == "A2 adjoint"


def test_tensor_eight_by_eight():
    _, doc, _ = run_json("tensor", "A2 adjoint", "1,1", "1,1")
    got = {tuple(t["highest_weight"]): t["multiplicity"] for t in doc["decomposition"]}
    assert got == {(2, 2): 1, (3, 0): 1, (0, 3): 1, (1, 1): 2, (0, 0): 1}
    assert doc["dimension"] == 64


def test_tensor_with_zero():
    _, doc, _ = run_json("tensor", "B2 so", "0,2", "0,0")
    assert [t["highest_weight"] for t in doc["decomposition"]] == [[0, 2]]


def test_tensor_outside_lattice():
    code, out, err = run("tensor", "A2 adjoint", "1,0", "1,1")
    assert code == 1
    assert "mod 3" in err and "1*1" in err


def test_express():
    code, out, _ = run("express", "A1 adjoint", "4")
    assert code == 0 and "X_(2)^2 - X_(2) - 1" in out
    _, doc, _ = run_json("express", "A2 adjoint", "2,2")
    assert doc["polynomial"] == "X_(1,1)^2 - 2*X_(1,1) - X_(3,0) - X_(0,3) - 1"
    _, doc, _ = run_json("express", "A2 adjoint", "3,0")
    assert doc["polynomial"] == "X_(3,0)"


def test_counterexample():
    _, doc, _ = run_json("counterexample", "pgl3")
    assert doc["spectra_equal"] and not doc["w_conjugate"]
    code, _, err = run("counterexample", "product", "--a", "1/5", "--b", "1/5")
    assert code == 1 and "orbit" in err


def test_center_and_hilbert():
    _, doc, _ = run_json("center", "D4")
    assert doc["smith_diagonal"] == [1, 1, 2, 2]
    assert all(row["matches_table"] for row in doc["factors"])
    assert doc["subgroup_orders"] == [1, 2, 2, 2, 4]
    _, doc, _ = run_json("hilbert", "D4 halfspin", "--oracle-bound", "2")
    assert doc["size"] == 5 and doc["oracle_agrees"]


@pytest.mark.parametrize(
    "argv",
    [
        ["info", "A2 foo"],
        ["info", "E9"],
        ["info"],
        ["tensor", "A2", "1,x", "0,0"],
        ["tensor", "A2", "1,0,0", "0,0"],
        ["tensor", "A2", "-1,0", "0,0"],
        ["tensor", "E7", "1,0,0,0,0,0,0", "0,0,0,0,0,0,0"],
        ["express", "A1 adjoint", "1"],
        ["bogus"],
    ],
)
def test_domain_errors_exit_1(argv):
    code, _, err = run(*argv)
    assert code == 1 and err.startswith("error:")


def test_error_document_in_json_mode():
    code, doc, _ = run_json("info", "A2 foo")
    assert code == 1
    assert doc["error"]["kind"] == "domain_error" and "position 3" in doc["error"]["message"]


def test_max_rank_raises_guard():
    code, doc, _ = run_json("--max-rank", "7", "tensor", "E7", "0,0,0,0,0,0,1", "0,0,0,0,0,0,0")
    assert code == 0 and doc["dimension"] == 56


@pytest.mark.parametrize(
    "argv",
    [
        ["info", "E7 adjoint"],
        ["center", "D4xA1"],
        ["hilbert", "E6 adjoint"],
        ["tensor", "G2", "1,0", "1,0"],
        ["express", "B2 so", "2,2"],
        ["counterexample", "product"],
    ],
)
def test_json_is_canonical_and_deterministic(argv):
    _, doc, raw = run_json(*argv)
    assert dumps(doc) == raw
    assert run_json(*argv)[2] == raw


def test_big_integers_become_strings():
    assert jsonable(2**53) == str(2**53)
    assert jsonable(2**53 - 1) == 2**53 - 1
    assert jsonable({"x": [True, None, 3]}) == {"x": [True, None, 3]}


def test_reproduction_suite_passes_and_is_deterministic():
    code, first, _ = run("paper-suite")
    assert code == 0
    assert first.splitlines()[-1] == "9/9 checks passed"
    assert run("paper-suite")[1] == first


def test_reproduction_suite_negative_control():
    code, out, _ = run("paper-suite", "--corrupt-cartan")
    assert code == 2
    assert out.startswith("FAIL  center-table")
    assert "PASS  e7-adjoint" in out


def test_reproduction_suite_with_seed():
    code, out, _ = run("--seed", "7", "paper-suite")
    assert code == 0 and "oracle-equivalence: 50 sampled pairs, seed 7" in out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "adjquot", "--json", "info", "A1 adjoint"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["hilbert_basis"] == [[2]]
