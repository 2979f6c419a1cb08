from __future__ import annotations

import json
import subprocess
import sys

import pytest

from linkirr.cli import main
from linkirr.datasets import builtin
from linkirr.formats import parse_graph6, write_edge_list, write_graph6
from linkirr.report import graph_report


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_exit_codes(capsys, tmp_path):
    code, out, _ = run(capsys, "check", "builtin:counterexample12")
    assert code == 0 and "distinct_link_codes: 12" in out
    assert run(capsys, "check", "builtin:icosahedron")[0] == 1
    assert run(capsys, "check", "builtin:nope")[0] == 2
    assert run(capsys, "check", str(tmp_path / "missing.txt"))[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1 2\n")
    assert run(capsys, "check", str(bad))[0] == 2


def test_exit_code_matrix(capsys, tmp_path):
    cases = {
        "builtin:unique6": 0,
        "builtin:K5": 1,
        "builtin:planar16": 1,
        "builtin:C7": 1,
    }
    for src, want in cases.items():
        assert run(capsys, "check", src)[0] == want, src
    g6 = tmp_path / "g.g6"
    g6.write_text(write_graph6(builtin("unique6")) + "\n")
    assert run(capsys, "check", str(g6))[0] == 0
    el = tmp_path / "g.txt"
    el.write_text(write_edge_list(builtin("counterexample12"), base=1))
    assert run(capsys, "check", str(el), "--base", "1")[0] == 0


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["search", "--n", "6", "--bogus"])
    assert exc.value.code == 2
    assert run(capsys, "search", "--n", "9", "--r", "5")[0] == 2
    assert run(capsys, "search", "--n", "10")[0] == 2


def test_links_table_and_vertex(capsys):
    code, out, _ = run(capsys, "links", "builtin:counterexample12")
    assert code == 0
    assert out.splitlines()[0] == "L(0): {2,3,3,3,4,4,5}"
    assert len(out.splitlines()) == 12
    code, out, _ = run(capsys, "links", "builtin:counterexample12", "--vertex", "8")
    assert parse_graph6(out.strip()).n == 7
    assert run(capsys, "links", "builtin:K4", "--vertex", "9")[0] == 2


def test_enumerate_streams(capsys):
    code, out, err = run(capsys, "enumerate", "--n", "5")
    assert code == 0 and len(out.split()) == 34 and err.startswith("34 graphs")
    code, out, err = run(capsys, "enumerate", "--n", "8", "--r", "3", "--connected")
    assert len(out.split()) == 5


def test_search_summary(capsys, tmp_path):
    code, out, _ = run(capsys, "search", "--n", "6")
    assert code == 0 and "1 hit / 156 examined" in out
    code, out, _ = run(capsys, "search", "--n", "8", "--all-r", "--checkpoint", str(tmp_path / "ck"))
    assert out.count("0 hits") == 8
    assert (tmp_path / "ck.r3").exists()
    code, out, _ = run(capsys, "search", "--n", "6", "--format", "structured")
    doc = json.loads(out)
    assert doc["sections"][0]["facts"][0] == ["summary", "1 hit / 156 examined"]


def test_planar_and_bounds(capsys):
    code, out, _ = run(capsys, "planar", "builtin:planar16")
    assert code == 0 and "planar: yes" in out and "rotation:" in out
    code, out, _ = run(capsys, "planar", "builtin:K3,3")
    assert code == 1 and "obstruction: K3,3" in out
    code, out, _ = run(capsys, "bounds", "--n", "6")
    assert "edge_lower: 7" in out and "edge_upper: 11" in out
    code, out, _ = run(capsys, "bounds", "--n", "12", "--r", "7", "--format", "structured")
    facts = dict(json.loads(out)["sections"][1]["facts"])
    assert facts["g"] == 1044 and facts["g_source"] == "exact"


def test_report_determinism_and_format_parity():
    g = builtin("counterexample12")
    a = graph_report(g, "x").render("text")
    b = graph_report(g, "x").render("text")
    assert a == b
    s1 = graph_report(g, "x").render("structured")
    assert s1 == graph_report(g, "x").render("structured")
    doc = json.loads(s1)
    # every fact key in the structured form appears in the text form
    for sec in doc["sections"]:
        assert f"[{sec['title']}]" in a
        for key, _ in sec["facts"]:
            assert f"  {key}:" in a


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "linkirr.cli", "search", "--n", "5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "0 hits / 34 examined" in proc.stdout
