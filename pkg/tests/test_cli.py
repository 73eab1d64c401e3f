import json
import subprocess
import sys
from pathlib import Path

import pytest

from mgbar.cli import main

DEMO_GRAPHS = Path(__file__).resolve().parent.parent / "demos" / "graphs"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_nef_check_ps(capsys):
    code, out, _ = run(capsys, "nef-check", "--genus", "4", "--alpha", "4/5", "--model", "ps")
    assert code == 0
    assert json.loads(out)["verdict"] == "nef"


def test_nef_check_mg_below_wall(capsys):
    code, out, _ = run(capsys, "nef-check", "--genus", "4", "--alpha", "4/5")
    d = json.loads(out)
    assert code == 0 and d["verdict"] == "not-nef" and d["witness"] == "A"
    assert d["value"] == "-1/5"


def test_nef_check_from_class_file(tmp_path, capsys):
    path = tmp_path / "cls.json"
    path.write_text(json.dumps({"g": 6, "lambda": "1", "delta": ["1", "0", "0", "0"]}))
    code, out, _ = run(capsys, "nef-check", "--class", str(path))
    assert code == 0 and json.loads(out)["witness"] == "A"


def test_phases_json(capsys):
    code, out, _ = run(capsys, "phases", "--genus", "10", "--model", "ps")
    d = json.loads(out)
    assert code == 0 and "7/10" in d["critical_alphas"]


def test_phases_tsv(capsys):
    code, out, _ = run(capsys, "phases", "--genus", "4", "--model", "mg", "--tsv")
    rows = [line.split("\t") for line in out.splitlines()]
    assert rows[0][0] == "stratum" and "9/11" in rows[0]
    col = rows[0].index("9/11")
    assert dict((r[0], r[col]) for r in rows[1:])["A"] == "0"


def test_fcurves_listing_and_table(capsys):
    code, out, _ = run(capsys, "fcurves", "--genus", "5")
    assert code == 0 and len(json.loads(out)) == 11
    code, out, _ = run(capsys, "fcurves", "--genus", "5", "--alpha", "9/11", "--tsv")
    assert out.splitlines()[1] == "A\t\t0"


def test_vnprofile(capsys):
    code, out, _ = run(capsys, "vnprofile", "--g", "5", "--r", "2", "--n", "2")
    d = json.loads(out)
    assert code == 0 and d["dims"] == [12, 10, 10] and d["vanishing_head"] == [0, 2]


def test_graph_commands(capsys):
    tail = str(DEMO_GRAPHS / "elliptic_tail.json")
    code, out, _ = run(capsys, "graph", "transform", tail)
    assert code == 0 and json.loads(out) == {"vertices": [{"id": 1, "h": 4, "c": 1, "m": 0}], "edges": []}
    code, out, _ = run(capsys, "graph", "check", tail)
    d = json.loads(out)
    assert d["stable"] and not d["pseudostable"] and d["elliptic_tails"] == [[0]]
    code, out, _ = run(capsys, "graph", "equiv", tail, str(DEMO_GRAPHS / "nodal_rational_tail.json"))
    assert json.loads(out) == {"t_equivalent": True}


def test_descent(capsys):
    code, out, _ = run(capsys, "descent", "coeff", "--e", "2", "--a", "7/10")
    assert json.loads(out)["coarse"] == "17/20"
    code, out, _ = run(capsys, "descent", "sweep", "--m-max", "10", "--e-max", "3", "--q-max", "3")
    assert json.loads(out)["status"] == "pass"


def test_oracle_small(capsys):
    code, out, _ = run(capsys, "oracle", "run", "--scope", "fcurves", "--bounds", '{"fcurves": {"g_max": 6}}')
    assert code == 0 and json.loads(out)["all_agree"] is True


def test_report(capsys):
    code, out, _ = run(capsys, "report", "--g-min", "4", "--g-max", "5")
    assert code == 0
    assert "## Genus 4" in out and "## Genus 5" in out
    assert "| ps | 7/10 | yes |" in out
    assert "| 7/10 | 7/10 | 17/20 |" in out


def test_report_empty_range(capsys):
    code, out, _ = run(capsys, "report", "--g-min", "6", "--g-max", "5")
    assert code == 0 and out == ""


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.md"
    code, out, _ = run(capsys, "report", "--g-min", "3", "--g-max", "3", "--out", str(target))
    assert code == 0 and out == "" and target.read_text().startswith("## Genus 3")


@pytest.mark.parametrize("argv", [
    ["nef-check", "--genus", "2", "--alpha", "1/2"],
    ["nef-check", "--genus", "5", "--alpha", "3/2"],
    ["nef-check", "--genus", "5"],
    ["report", "--g-min", "2", "--g-max", "5"],
    ["vnprofile", "--g", "5", "--r", "7", "--n", "2"],
    ["graph", "check", "/nonexistent.json"],
    ["descent", "coeff", "--e", "0", "--a", "1/2"],
])
def test_domain_errors_exit_one(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and "error" in err


@pytest.mark.parametrize("argv", [
    ["phases"],
    ["nef-check", "--genus", "5", "--alpha", "0.5"],
    ["phases", "--genus", "5", "--model", "bogus"],
    ["frobnicate"],
])
def test_usage_errors_exit_two(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_console_script_is_deterministic():
    argv = [sys.executable, "-m", "mgbar.cli", "report", "--g-min", "3", "--g-max", "6"]
    first = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    assert first == second and first
