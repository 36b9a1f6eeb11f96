import json
import subprocess
import sys

import pytest

from bimon.cli import parse_chain, run_command
from bimon.instances import make_instance
from bimon.matrices import MatrixObj

from conftest import dual_mod_two


def run(*argv):
    code, text = run_command(list(argv))
    return code, json.loads(text)


def test_anti_involution_example():
    code, rep = run("check", "anti-involution", "--category", "wreath:2", "--max-size", "3",
                    "--samples", "500", "--seed", "42")
    assert code == 0
    (suite,) = rep["suites"]
    assert all(law["passed"] for law in suite["laws"])
    assert rep["spec"]["sample_count"] == 500 and rep["instance"] == "wreath:2"


def test_gl_member_example():
    code, rep = run("gl", "member", "--category", "finite-sets", "--matrix", "[[1,1],[0,1]]")
    assert code == 0 and rep["result"]["member"] is True
    code, rep = run("gl", "member", "--category", "finite-sets", "--matrix", "[[2]]")
    assert code == 0 and rep["result"]["member"] is False


def test_bar_tau_example():
    code, rep = run("bar", "tau", "--category", "finite-sets", "--n", "1", "--q", "2",
                    "--chain", "[[2]],[[3]]")
    assert code == 0
    assert rep["result"]["diagonal"] == [[[3]], [[2]]]
    assert rep["result"]["chain_in_gl"] == [False, False]


def test_report_shape():
    code, rep = run("check", "eq-e", "--category", "discrete:Z", "--samples", "20")
    assert code == 0
    assert set(rep) >= {"tool_version", "command", "instance", "spec", "suites"}
    assert rep["command"] == ["check", "eq-e"]
    law = rep["suites"][0]["laws"][0]
    assert {"law", "anchor", "samples", "passed"} <= set(law)


def test_failing_law_exits_one_with_replayable_witness(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(dual_mod_two(c_oplus_11=1)))
    code, rep = run("check", "bimonoidal", "--category", f"table:{path}", "--samples", "100")
    assert code == 1
    bad = [r for r in rep["suites"][0]["laws"] if not r["passed"]]
    assert bad and all(r["witness"]["inputs"] for r in bad)
    assert all(r["anchor"] for r in bad)


@pytest.mark.parametrize("argv,kind", [
    (["check", "bimonoidal", "--category", "nope"], "unknown-instance"),
    (["check", "frobnicate"], "usage"),
    (["frob", "x"], "usage"),
    (["gl", "member", "--matrix", "[[1,1]"], "usage"),
    (["check", "tau", "--category", "bichar:3:1"], "capability"),
    (["check", "bimonoidal", "--category", "table:/nonexistent.json"], "table"),
])
def test_errors_exit_two(argv, kind):
    code, rep = run(*argv)
    assert code == 2
    assert rep["error"]["type"] == kind and rep["error"]["message"]


def test_reports_are_byte_identical(monkeypatch):
    argv = ["check", "bimonoidal", "--category", "monomial:4", "--samples", "50", "--seed", "3"]
    first = run_command(argv)
    monkeypatch.setenv("BIMON_THREADS", "4")
    assert run_command(argv) == first


def test_seed_changes_samples_not_verdict():
    a = run_command(["check", "braided", "--category", "bichar:4:1", "--samples", "30", "--seed", "1"])
    b = run_command(["check", "braided", "--category", "bichar:4:1", "--samples", "30", "--seed", "2"])
    assert a[0] == b[0] == 0
    assert json.loads(a[1])["spec"]["seed"] == 1


def test_json_file_output(tmp_path):
    path = tmp_path / "out.json"
    code, text = run_command(["pi0", "objects", "--category", "wedge:2", "--max-size", "1",
                              "--json", str(path)])
    assert code == 0
    assert json.loads(path.read_text()) == json.loads(text)


def test_check_all_skips_inapplicable():
    code, rep = run("check", "all", "--category", "discrete:M2F2", "--samples", "20",
                    "--max-size", "2")
    assert code == 0
    names = {s["suite"] for s in rep["suites"]}
    assert "braided" not in names and "bimonoidal" in names
    assert "braided" in rep["skipped_suites"]


def test_export_table_loads_back(tmp_path):
    code, rep = run("export", "table", "--category", "discrete:Z/3", "--max-size", "2")
    assert code == 0
    path = tmp_path / "z3.json"
    path.write_text(json.dumps(rep["result"]))
    code, rep = run("check", "bimonoidal", "--category", f"table:{path}", "--samples", "20")
    assert code == 0


def test_parse_chain_forms():
    E = make_instance("finite-sets")
    expected = [MatrixObj.of([[2]]), MatrixObj.of([[3]])]
    assert parse_chain(E, "[[2]],[[3]]") == expected
    assert parse_chain(E, "[[[2]],[[3]]]") == expected
    assert parse_chain(E, "[[1,1],[0,1]]") == [MatrixObj.of([[1, 1], [0, 1]])]


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bimon.cli", "gl", "member", "--category",
                           "finite-sets", "--matrix", "[[1]]"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["member"] is True


def test_saved_export_report_is_loadable(tmp_path):
    path = tmp_path / "z4.json"
    code, _ = run_command(["export", "table", "--category", "discrete:Z/4", "--json", str(path)])
    assert code == 0
    code, rep = run("check", "bimonoidal", "--category", f"table:{path}", "--samples", "20")
    assert code == 0 and rep["instance"] == f"table:{path}"
