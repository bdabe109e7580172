import csv
import io
import json
import subprocess
import sys

from toricvol import __version__
from toricvol.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(map(str, argv)), out, err)
    return code, out.getvalue(), err.getvalue()


def test_normvol_a1(data_dir):
    code, out, _ = call("normvol", data_dir / "a1_surface.json")
    doc = json.loads(out)
    assert code == 0 and doc["value"] == "2" and doc["exact"] is True


def test_normvol_cross_check(data_dir):
    code, out, _ = call("normvol", data_dir / "third_11.json", "--cross-check")
    doc = json.loads(out)
    assert code == 0 and doc["value"] == "4/3" and doc["index"] == 3
    assert doc["cross_check"]["agrees"] and doc["cross_check"]["local_minimum"]


def test_not_qgorenstein(data_dir):
    code, out, err = call("normvol", data_dir / "not_qgor.json")
    assert code == 1 and out == ""
    assert err.startswith("NotQGorenstein: ") and err.count("\n") == 1


def test_verify_quadric_rdp(data_dir):
    code, out, _ = call("verify", data_dir / "quadric3.json", "--suite", "rdp")
    (rep,) = json.loads(out)
    assert code == 0 and rep["equality_within_tol"] and rep["holds"]


def test_verify_csv(data_dir):
    code, out, _ = call("verify", data_dir / "quadric3.json", "--csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert {"volume_bound", "volume_bound_printed", "rdp_bound"} <= {r["name"] for r in rows}


def test_verify_exit_code_on_violation(data_dir, monkeypatch):
    from toricvol import bounds, cli

    def fake(obj, suite, tol):
        return [bounds.compare("fake", 2, 1, False)]

    monkeypatch.setattr(cli, "run_suite", fake)
    code, _, _ = call("verify", data_dir / "quadric3.json")
    assert code == 2


def test_polytope_verbs(data_dir):
    code, out, _ = call("santalo", data_dir / "pyramid3.json")
    doc = json.loads(out)
    assert code == 0 and doc["dual_volume"] == "2048/81" and "residual" in doc
    code, out, _ = call("dual", data_dir / "octahedron.json")
    assert len(json.loads(out)["vertices"]) == 8
    code, out, _ = call("--float", "volume", data_dir / "rational_square.json")
    assert json.loads(out) == {"volume": "1", "volume_float": 1.0}
    code, out, _ = call("hull", data_dir / "square.json")
    assert len(json.loads(out)["facets"]) == 4
    code, out, _ = call("radon", data_dir / "square.json")
    (part,) = json.loads(out)
    assert part["radon_point"] == ["1/2", "1/2"]


def test_enumerate_and_spectrum(tmp_path):
    target = tmp_path / "s.csv"
    code, out, _ = call("enumerate", "--dim", 2, "--epsilon", 0.5, "--out", target)
    assert code == 0 and json.loads(out)["entries"] == 15
    rows = list(csv.DictReader(target.open()))
    assert rows[0]["volume_upper"] == "4" and len(rows) == 15
    code, out, _ = call("spectrum", "--dim", 2, "--epsilon", 0.5, "--csv")
    assert code == 0 and out.splitlines()[1] == "4,1,"


def test_usage_errors(data_dir, tmp_path):
    code, _, err = call("normvol", data_dir / "a1_surface.json", "--bogus")
    assert code == 1 and err.startswith("UsageError:")
    code, _, err = call("frobnicate")
    assert code == 1
    code, _, err = call("normvol", tmp_path / "missing.json")
    assert code == 1 and err.startswith("IOError:")
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2, "vertices": [[0.5, 0], [1, 0], [0, 1]]}')
    code, _, err = call("volume", bad)
    assert code == 1 and err.startswith("FormatError:")


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "toricvol", "--version"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and __version__ in res.stdout
