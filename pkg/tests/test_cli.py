import csv
import json
import subprocess
import sys

import pytest

from revlex.bounds import SWEEP_HEADER, pyramid_facet_count
from revlex.cli import fmt_q, main
from revlex.graph import edge_count_formula
from revlex.polytope import make_polytope


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_describe(capsys):
    code, out, _ = run(capsys, "describe", "--n", "589")
    assert code == 0
    assert "dim: 10" in out
    assert "signature: [9, 6, 3, 2, 0]" in out
    assert "facets: 23" in out
    assert f"edges: {edge_count_formula(make_polytope(589))}" in out


def test_describe_json(capsys):
    code, out, _ = run(capsys, "describe", "--v", "1011001001", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["v"] == "1011001001" and data["block_dims"] == [9, 6, 3, 2, 0]
    assert data["num_facets"] == 23


def test_facets_minimal(capsys):
    code, out, _ = run(capsys, "facets", "--n", "7", "--minimal")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 7
    assert lines[-1] == "1 1 1 <= 2  # full-support"


def test_facets_full_json(capsys):
    code, out, _ = run(capsys, "facets", "--n", "589", "--full", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 26


def test_facets_not_full_dimensional(capsys):
    code, _, err = run(capsys, "facets", "--v", "0110")
    assert code == 2 and err.startswith("error: ")
    code, out, _ = run(capsys, "facets", "--v", "0110", "--project")
    assert code == 0 and len(out.splitlines()) == 5


def test_graph_formats(capsys):
    assert run(capsys, "graph", "--n", "3")[1] == "0 1\n0 2\n1 2\n"
    _, out, _ = run(capsys, "graph", "--n", "7", "--format", "json")
    assert json.loads(out)["num_edges"] == 12
    _, out, _ = run(capsys, "graph", "--n", "4", "--format", "dot")
    assert out.startswith("graph P4 {") and out.count("--") == 4


def test_maximize(capsys):
    code, out, _ = run(capsys, "maximize", "--n", "7", "--c", "1,-1,2")
    assert code == 0 and out == "value: 3/1\nargmax: 101\n"
    _, out, _ = run(capsys, "maximize", "--n", "7", "--c", "1/3, 1/2, -1", "--json", "--decimal", "3")
    assert json.loads(out)["value"] == "0.833"


def test_maximize_bad_input(capsys):
    assert run(capsys, "maximize", "--n", "7", "--c", "1,x,2")[0] == 2
    assert run(capsys, "maximize", "--n", "7", "--c", "1,2")[0] == 2


def test_expansion(capsys):
    code, out, _ = run(capsys, "expansion", "--n", "3", "--exact", "--audit")
    assert code == 0
    assert json.loads(out) == {"n": 3, "phi_max": "3/2", "lower_bound": "1/1",
                               "exact": "2/1", "audited": True}
    assert run(capsys, "expansion", "--n", "100", "--audit")[0] == 2


def test_pyramid(capsys):
    code, out, _ = run(capsys, "pyramid", "--d", "5", "--n", "7", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["num_facets"] == 7 and data["num_edges"] == 19
    assert data["avg_degree"] == "38/7" and data["expansion_lower_bound"] == "7/4"
    assert run(capsys, "pyramid", "--d", "5", "--n", "40")[0] == 2


def test_sweep(capsys, tmp_path):
    path = tmp_path / "p5.csv"
    code, out, _ = run(capsys, "sweep", "--d", "5", "--out", str(path))
    assert code == 0 and "wrote 27 rows" in out
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert list(rows[0]) == SWEEP_HEADER
    assert [int(r["n"]) for r in rows] == list(range(6, 33))
    assert all(int(r["num_facets"]) == pyramid_facet_count(5, int(r["n"])) for r in rows)


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--max-d", "4")
    assert code == 0
    assert out.splitlines()[-1] == "OK: 0 failing check(s)"
    assert all(line.startswith("PASS") for line in out.splitlines()[:-1])


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["describe"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["describe", "--n", "0"])
    assert exc.value.code == 2


def test_fmt_q():
    from fractions import Fraction
    assert fmt_q(Fraction(38, 7)) == "38/7"
    assert fmt_q(Fraction(-1, 3), 2) == "-0.33"
    assert fmt_q(Fraction(5, 2), 0) == "2"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "revlex", "facets", "--n", "7"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.splitlines()[-1] == "1 1 1 <= 2  # full-support"
