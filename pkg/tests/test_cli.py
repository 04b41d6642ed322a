from __future__ import annotations

import json
import subprocess
import sys

import pytest

from schubres.cli import main
from schubres.report import build_report


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--diagram", "2,4,4", "--json")
    assert code == 0 and json.loads(out)["type"] == "affine"
    code, out, _ = run(capsys, "classify", "--diagram", "e8")
    assert "finite" in out


def test_ranks_affine(capsys):
    code, out, _ = run(capsys, "ranks", "--diagram", "2,4,4", "--max-length", "3")
    assert code == 0 and out.strip() == "1,1,1,2"
    code, _, err = run(capsys, "ranks", "--diagram", "2,3,6")
    assert code == 2 and "max-length" in err


def test_orbit_json_and_cache(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("SCHUBRES_CACHE", str(tmp_path))
    code, out, _ = run(capsys, "orbit", "--diagram", "e6", "--json")
    data = json.loads(out)
    assert code == 0 and data["schema"] == 1 and len(data["elements"]) == 72
    assert (tmp_path / "poset_2_3_3_full.json").is_file()
    code, again, _ = run(capsys, "orbit", "--diagram", "e6", "--json")
    assert again == out


def test_sigma_and_generators(capsys):
    _, out, _ = run(capsys, "sigma", "--diagram", "e6")
    assert "sigma3p  (0 0 -1 1 | 1 0)" in out
    _, out, _ = run(capsys, "generators", "--diagram", "e7", "--json")
    data = json.loads(out)
    assert [g["degree"] for g in data["generators"]] == [7, 6, 6, 6, 6, 6]
    _, out, _ = run(capsys, "generators", "--diagram", "2,4,4", "--max-length", "4", "--variety", "sigma3p")
    assert out.startswith("5 generators")


def test_levi(capsys):
    _, out, _ = run(capsys, "levi", "--element", "sigma3")
    assert out.startswith("sigma3: GL2 x GL4")
    _, out, _ = run(capsys, "levi", "--element", "sigma0", "--json")
    assert json.loads(out)["blocks"] == [6]


def test_grading(capsys):
    _, out, _ = run(capsys, "grading", "--diagram", "e8", "--json")
    assert list(json.loads(out)["dims"].values()) == [8, 28, 56, 64, 56, 28, 8]
    _, out, _ = run(capsys, "grading", "--diagram", "e7", "--module", "--json")
    data = json.loads(out)
    assert data["span"] == 7 and data["dims"]["0"] == data["dims"]["7"] == 1
    code, _, _ = run(capsys, "grading", "--diagram", "2,4,4")
    assert code == 2


E6 = "[[0],[3,3,3,3,4],[5,5,5,5,5,5],[7,7]]"


def test_rescalc(capsys):
    assert run(capsys, "rescalc", "numerator", E6)[1] == "2t^4 + 6t^3 + 6t^2 + 3t + 1\n"
    assert run(capsys, "rescalc", "degree", E6)[1] == "18\n"
    assert json.loads(run(capsys, "rescalc", "link", E6, "--ci", "4,3,3", "--json")[1]) == json.loads(E6)
    _, out, _ = run(capsys, "rescalc", "gorenstein", E6, "--shift", "10")
    assert out.startswith("0 -> A(-10) -> A^6(-7) + A(-6)")
    _, out, _ = run(capsys, "rescalc", "solve", "--gens", "3,3,3,3,4", "--top", "7,7", "--n", "6", "--json")
    assert json.loads(out)["degrees"] == [5] * 6


def test_rescalc_errors(capsys):
    code, _, err = run(capsys, "rescalc", "numerator", E6, "--codim", "4")
    assert code == 1 and "NotDivisible" in err
    assert run(capsys, "rescalc", "numerator", "[[1]]")[0] == 2
    assert run(capsys, "rescalc", "numerator", "not json")[0] == 2
    assert run(capsys, "rescalc", "link", E6, "--ci", "x")[0] == 2


def test_schur(capsys):
    code, out, _ = run(capsys, "schur", "check", "--type", "e8", "--variety", "sigma3p")
    assert code == 0 and out.startswith("e8 sigma3p: erratum")
    assert "should be -25" in out
    _, out, _ = run(capsys, "schur", "check", "--type", "e7", "--variety", "sigma3", "--json")
    assert json.loads(out)["status"] == "pass"


def test_invariant(capsys, tmp_path):
    coeffs = tmp_path / "w.json"
    coeffs.write_text(json.dumps({"1,2,3": 1, "4,5,6": 1}))
    _, out, _ = run(capsys, "invariant", "--eval", str(coeffs), "--json")
    assert json.loads(out)["delta"] != 0
    coeffs.write_text(json.dumps({"1,2,3": 5}))
    assert run(capsys, "invariant", "--eval", str(coeffs))[1] == "0\n"
    _, out, _ = run(capsys, "invariant", "--json")
    assert json.loads(out)["degree"] == 4
    target = tmp_path / "gens.m2"
    code, out, _ = run(capsys, "invariant", "--generators", "sigma3", "--emit", "m2", "--out", str(target))
    assert code == 0 and out == ""
    assert "print betti res I" in target.read_text()
    assert run(capsys, "invariant", "--emit", "m2")[0] == 2
    assert run(capsys, "invariant", "--eval", str(tmp_path / "missing.json"))[0] == 1


def test_report_text_and_json(capsys):
    code, out, _ = run(capsys, "report", "--type", "e6")
    assert code == 0
    assert "[PASS   ] degree(Y_sigma3)  (e6 Hilbert series): 18" in out
    assert "fail=0" in out
    _, again, _ = run(capsys, "report", "--type", "e6")
    assert again == out
    _, js, _ = run(capsys, "report", "--type", "t236", "--json")
    data = json.loads(js)
    assert data["schema"] == 1 and data["type"] == "t236"
    assert {e["status"] for e in data["entries"]} <= {"pass", "derived"}


@pytest.mark.parametrize("kind", ["e6", "e7", "e8", "t244", "t236"])
def test_report_statuses(kind):
    entries = build_report(kind)
    statuses = [e.status for e in entries]
    assert "fail" not in statuses
    if kind == "e6":
        assert len(entries) >= 20 and set(statuses) <= {"pass", "derived"}
    if kind == "e7":
        assert any(e.status == "derived" and "complete intersection" in e.claim for e in entries)
    if kind == "e8":
        errata = [e for e in entries if e.status == "erratum"]
        assert sorted(e.computed for e in errata) == [21, 25]


def test_report_unknown_type():
    with pytest.raises(ValueError):
        build_report("e9")


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "ranks", "--frobnicate")[0] == 2
    assert run(capsys, "ranks", "--diagram", "1,2")[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "schubres.cli", "ranks", "--diagram", "2,3,6", "--max-length", "3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "1,1,1,2"
