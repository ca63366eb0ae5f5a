import io as stdio
import json
import subprocess
import sys

import pytest

from realtoric import io
from realtoric.cli import main
from realtoric.families import permutahedron_cover
from realtoric.small_cover import validate

from conftest import PROBLEMS


def run(*argv):
    out = stdio.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_betti_torus_and_klein():
    code, text = run("betti", str(PROBLEMS / "torus-square.json"), "--json")
    report = json.loads(text)
    assert code == 0
    assert report["betti"] == [1, 2, 1] and report["orientable"] is True
    assert report["witness"] == {"bitmask": 3, "members": [1, 2]}
    code, text = run("betti", str(PROBLEMS / "klein-square.json"), "--json")
    report = json.loads(text)
    assert report["betti"] == [1, 1, 0] and report["orientable"] is False
    assert report["witness"] is None


def test_human_readable_output():
    code, text = run("betti", str(PROBLEMS / "torus-square.json"), "--breakdown")
    assert code == 0
    assert "orientable: yes (S = {1,2}, bitmask 3)" in text
    assert "S={1,2} (bitmask 3): 2: 1" in text
    assert "time:" in text


def test_malformed_inputs(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run("betti", str(bad))[0] == 2
    bad.write_text(json.dumps({"complex": {"m": 4}}))
    assert run("betti", str(bad))[0] == 2
    bad.write_text(json.dumps({"complex": {"m": 2, "maximal_faces": [[0, 5]]},
                               "chi": {"n": 1, "columns": [[1], [1]]}}))
    assert run("betti", str(bad))[0] == 2
    assert run("betti", str(tmp_path / "missing.json"))[0] == 2


def test_validation_failure_exit_3():
    code, text = run("validate", str(PROBLEMS / "bad-chi.json"))
    assert code == 3
    assert "FAIL  [1, 2]" in text and "pass  [1, 4]" in text
    assert run("betti", str(PROBLEMS / "bad-chi.json"))[0] == 3
    code, text = run("validate", str(PROBLEMS / "torus-square.json"))
    assert code == 0 and "valid: 4 maximal faces checked" in text


def test_permutahedron_closed_form():
    code, text = run("permutahedron", "4", "--json")
    report = json.loads(text)
    assert code == 0
    assert report["betti"] == report["closed_form"] == [1, 6, 5, 0]
    assert report["verdict"] == "MATCH"
    code, text = run("permutahedron", "3")
    assert code == 0 and "MATCH" in text


def test_permutahedron_bad_n():
    assert run("permutahedron", "1")[0] == 2


def test_graph_assoc(tmp_path):
    code, text = run("graph-assoc", str(PROBLEMS / "path3.json"), "--json")
    assert code == 0 and json.loads(text)["betti"] == [1, 2, 0]
    g = tmp_path / "g.json"
    g.write_text(json.dumps({"n": 4, "edges": [[1, 2], [3, 4]]}))
    assert run("graph-assoc", str(g))[0] == 2


def test_emit_roundtrip(tmp_path):
    path = tmp_path / "hex.json"
    code, _ = run("permutahedron", "3", "--emit", str(path))
    assert code == 0
    K, chi = io.load_problem(path)
    assert validate(K, chi) == permutahedron_cover(3)
    code, text = run("betti", str(path), "--json")
    assert json.loads(text)["betti"] == [1, 3, 0]


def test_ma_euler():
    code, text = run("ma-euler", str(PROBLEMS / "torus-square.json"))
    assert code == 0 and "4 * 0 = 0" in text and "MATCH" in text


def test_ma_euler_hexagon(tmp_path):
    path = tmp_path / "hex.json"
    run("permutahedron", "3", "--emit", str(path))
    code, text = run("ma-euler", str(path), "--json")
    report = json.loads(text)
    assert code == 0
    assert report["moment_angle_euler"] == -32 == report["sheets"] * report["euler"]
    assert report["verdict"] == "MATCH"
    assert run("ma-euler", str(PROBLEMS / "bad-chi.json"))[0] == 3


def test_secant():
    code, text = run("secant", "4")
    assert code == 0 and text.splitlines()[-1] == "A_8 = 1385"
    assert json.loads(run("secant", "3", "--json")[1]) == [1, 1, 5, 61]


def test_report_json_roundtrip():
    _, text = run("permutahedron", "4", "--json", "--breakdown")
    report = json.loads(text)
    assert json.loads(json.dumps(report, indent=2)) == report
    assert json.dumps(report, indent=2) + "\n" == text
    totals = [0] * len(report["betti"])
    for row in report["breakdown"]:
        for q, r in row["contributions"].items():
            totals[int(q)] += r
    assert totals == report["betti"]


def test_jobs_byte_identical():
    a = run("betti", str(PROBLEMS / "klein-square.json"), "--json", "--breakdown", "--jobs", "1")
    b = run("betti", str(PROBLEMS / "klein-square.json"), "--json", "--breakdown", "--jobs", "4")
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "realtoric", "betti",
                           str(PROBLEMS / "torus-square.json"), "--json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["betti"] == [1, 2, 1]
