import json
import subprocess
import sys

import jsonschema
import pytest

from cyclocolour.cli import main
from cyclocolour.schema import ENUMERATION_SCHEMA, REPORT_SCHEMA


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--n", "4", "--q", "5,0")
    rep = json.loads(out)
    jsonschema.validate(rep, REPORT_SCHEMA)
    assert code == 0 and rep["perfect"] and rep["H"] == "M4:D4"
    code, out, _ = run(capsys, "classify", "--n", "4", "--q", "3,4")
    rep = json.loads(out)
    assert not rep["perfect"] and rep["H"] == "M4:C4"
    code, out, _ = run(capsys, "classify", "--n", "5", "--q", "1,0,0,0")
    rep = json.loads(out)
    jsonschema.validate(rep, REPORT_SCHEMA)
    assert rep["norm"] == 1 and rep["quotient_order"] == 1


def test_classify_errors(capsys):
    code, _, err = run(capsys, "classify", "--n", "23", "--q", "1")
    assert code == 2 and "class number one required" in err
    code, _, err = run(capsys, "classify", "--n", "6", "--q", "1")
    assert code == 2
    code, _, _ = run(capsys, "classify", "--n", "4", "--q", "1,x")
    assert code == 3
    code, _, _ = run(capsys, "classify", "--n", "4", "--q", "1,2,3")
    assert code == 3
    code, _, _ = run(capsys, "classify", "--n", "4", "--q", "0,0")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--n", "four", "--q", "1"])
    assert exc.value.code == 3


def test_enumerate(capsys):
    for ell, j, perfect in [(8, 2, 0), (64, 3, 1)]:
        code, out, _ = run(capsys, "enumerate", "--n", "7", "--colours", str(ell))
        data = json.loads(out)
        jsonschema.validate(data, ENUMERATION_SCHEMA)
        assert data["j"] == j and sum(r["perfect"] for r in data["reports"]) == perfect
    code, out, _ = run(capsys, "enumerate", "--n", "4", "--colours", "3")
    assert json.loads(out)["j"] == 0


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--n", "9", "--lmax", "64", "--json")
    rows = json.loads(out)
    assert sorted({r["l"] for r in rows}) == [3, 9, 19, 27, 37, 57, 64]
    code, out, _ = run(capsys, "table", "--n", "3", "--lmax", "4")
    assert [line.split()[1] for line in out.splitlines()[1:]] == ["3", "4"]
    code, out, _ = run(capsys, "table", "--n", "3", "--lmax", "0")
    assert code == 0 and len(out.splitlines()) == 1


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4", "--q", "0,2", "--bound", "3")
    assert code == 0 and "PASS: 8/8" in out
    code, out, _ = run(capsys, "verify", "--n", "4", "--q", "2,1", "--bound", "3")
    assert code == 0 and "PASS: 8/8" in out
    refl = [line for line in out.splitlines() if line.strip().startswith("ref")]
    assert all("H=0" in line and "consistent=0" in line for line in refl)
    code, out, _ = run(capsys, "verify", "--n", "4", "--q", "0,2", "--bound", "0")
    assert code == 0 and out.splitlines()[-1].startswith("PASS")


def test_render(capsys, tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    for path in (a, b):
        code, out, _ = run(capsys, "render", "--mode", "ab", "--n", "8", "--q", "1,1,1,1",
                           "--radius", "8", "--out", str(path))
        assert code == 0
    assert a.read_bytes() == b.read_bytes()
    code, out, _ = run(capsys, "render", "--mode", "lattice", "--n", "4", "--q", "2",
                       "--radius", "0", "--out", str(a))
    assert code == 0 and "wrote 1 points" in out
    code, _, _ = run(capsys, "render", "--mode", "lattice", "--n", "8", "--q", "2",
                     "--out", str(a))
    assert code == 2


def test_json_is_deterministic(capsys):
    outs = {run(capsys, "enumerate", "--n", "9", "--colours", "57", "--seed", "7")[1] for _ in range(2)}
    assert len(outs) == 1


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cyclocolour", "classify", "--n", "8", "--q", "1,1,1,1"],
                         capture_output=True, text=True, check=True)
    rep = json.loads(res.stdout)
    assert rep["norm"] == 8 and rep["S"] == "C_2"
