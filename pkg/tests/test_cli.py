from __future__ import annotations

import csv
import io
import json
import math
import subprocess
import sys

import pytest

from speclim.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_radius_path7(capsys):
    code, out, _ = run(capsys, "radius", "--family", "path:7", "--model", "A")
    assert code == 0
    data = json.loads(out)
    assert abs(data["radius"] - 2 * math.cos(math.pi / 8)) < 1e-11
    assert data["n"] == 7 and data["model"] == "A"


def test_hoffman_residual(capsys):
    code, out, _ = run(capsys, "limits", "--hoffman", "5")
    data = json.loads(out)
    assert code == 0 and data["residual"] < 1e-12 and data["kind"] == "hoffman"


def test_verify_pass_report(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "A_lt2", "--nmax", "8")
    data = json.loads(out)
    assert code == 0 and data["passed"] and data["n_max"] == 8 and data["mismatches"] == []


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "--format", "csv", "verify", "--theorem", "quipu_diameter")
    assert code == 1
    row = next(csv.DictReader(io.StringIO(out)))
    assert row["result"] == "FAIL" and int(row["mismatches"]) > 0


@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["radius"],
    ["radius", "--family", "path:7", "--input", "x.txt"],
    ["radius", "--family", "path:7", "--model", "Aalpha"],
    ["radius", "--family", "path:7", "--alpha", "0.3"],
    ["radius", "--family", "nosuch:3"],
    ["radius", "--family", "path:x"],
    ["radius", "--family", "path:0"],
    ["radius", "--input", "/nonexistent/graph.txt"],
    ["verify", "--theorem", "A_lt2", "--nmax", "12"],
    ["radius", "--family", "path:7", "--format", "xml"],
])
def test_usage_errors(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2 and out == ""


def test_malformed_file_line_number(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("n 3\n0 1\n2 three\n")
    code, _, err = run(capsys, "radius", "--input", str(f))
    assert code == 2 and "line 3" in err


def test_input_file_flavors(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("n 3\n0 1\n1 2\n2 0\n")
    _, out, _ = run(capsys, "radius", "--input", str(f), "--model", "Q")
    assert abs(json.loads(out)["radius"] - 4) < 1e-12
    f.write_text("n 3\n0 1 -\n1 2 +\n2 0 +\n")
    _, out, _ = run(capsys, "spectrum", "--input", str(f), "--model", "Signed")
    assert json.loads(out)["eigenvalues"] == pytest.approx([-2, 1, 1], abs=1e-10)


def test_byte_identical_output():
    argv = [sys.executable, "-m", "speclim.cli", "--format", "table", "shearer", "--target", "2.2"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first


def test_verify_output_is_stable(capsys):
    outs = [run(capsys, "verify", "--theorem", "L_eq4", "--nmax", "6")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_csv_and_table(capsys):
    _, out, _ = run(capsys, "spectrum", "--family", "cycle:4", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [float(r["eigenvalue"]) for r in rows] == pytest.approx([-2, 0, 0, 2], abs=1e-12)
    _, out, _ = run(capsys, "--format", "table", "limits")
    lines = out.splitlines()
    assert lines[0].split() == ["name", "value"] and set(lines[1]) == {"-", " "}
    assert any(line.startswith("rho1") for line in lines)


def test_format_on_either_side(capsys):
    a = run(capsys, "--format", "csv", "radius", "--family", "star:4")[1]
    b = run(capsys, "radius", "--family", "star:4", "--format", "csv")[1]
    assert a == b and a.startswith("model,")


def test_twelve_significant_digits(capsys):
    _, out, _ = run(capsys, "--format", "csv", "radius", "--family", "path:7")
    row = next(csv.DictReader(io.StringIO(out)))
    assert row["radius"] == f"{2 * math.cos(math.pi / 8):.12g}"


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--family", "tshape:1,2,5")
    data = json.loads(out)
    assert code == 0 and data["region"] == "=2" and data["agreement"] is True
    _, out, _ = run(capsys, "classify", "--family", "ctildeprime:7", "--model", "Hermitian")
    assert json.loads(out)["region"] == "=2"


def test_limits_variants(capsys):
    _, out, _ = run(capsys, "limits", "--guo", "0")
    assert json.loads(out)["value"] == 4
    _, out, _ = run(capsys, "limits", "--thresholds", "--n", "6")
    data = json.loads(out)
    assert data["s2"] == pytest.approx(0.2192, abs=1e-4) and data["s1"] is not None
    _, out, _ = run(capsys, "limits", "--chi", "--family", "star:3", "--vertex", "0")
    assert json.loads(out)["value"] == pytest.approx(1.5 * math.sqrt(2), abs=1e-9)
    code, _, _ = run(capsys, "limits", "--chi")
    assert code == 2


def test_hypergraph(capsys):
    code, out, _ = run(capsys, "hypergraph", "--family", "hypercycle:5")
    data = json.loads(out)
    assert code == 0 and data["r"] == 3 and abs(data["value"] - 4 ** (1 / 3)) < 1e-6
    _, out, _ = run(capsys, "hypergraph", "--family", "hyperpath:4", "--reduce", "1")
    data = json.loads(out)
    assert data["r"] == 2 and data["value"] == pytest.approx(2 * math.cos(math.pi / 6), abs=1e-9)


def test_shearer(capsys):
    _, out, _ = run(capsys, "shearer", "--target", "2.5")
    data = json.loads(out)
    radii = [s["radius"] for s in data["steps"]]
    # printed radii are rounded to 12 digits, so late steps may tie; strictness is checked on the library
    assert all(x <= y for x, y in zip(radii, radii[1:])) and 2.5 - radii[-1] < 0.01
    code, _, _ = run(capsys, "shearer", "--target", "1.5")
    assert code == 2
