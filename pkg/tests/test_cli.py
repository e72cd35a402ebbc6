import io
import json
import subprocess
import sys

import pytest

from arcloci.cli import run

from conftest import FIXTURES


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def f(name):
    return FIXTURES / name


def test_lct_facets():
    code, out, _ = call("lct", f("cusp.ideal.json"))
    assert code == 0
    assert out.splitlines() == ["lct = 5/6", "witness facet normal = (3,2)"]


def test_lct_arcs():
    code, out, _ = call("lct", f("cusp.ideal.json"), "--via", "arcs")
    assert out.splitlines()[:2] == ["lct = 5/6", "witness level l+1 = 6"]
    assert "codim Cont^>=6 = 5" in out


def test_lct_smooth_divisor():
    assert call("lct", f("unit-divisor.ideal.json"))[1].splitlines()[0] == "lct = 1"


def test_contact():
    code, out, _ = call("contact", f("cusp.ideal.json"), "--p", 6)
    assert out.strip() == "codim Cont^6 = 5; minimizers: (3,2)"
    assert call("contact", f("maximal2.ideal.json"), "--p", 3, "--geq")[1].strip() == \
        "codim Cont^>=3 = 6; minimizers: (3,3)"


def test_contact_empty(tmp_path):
    p = tmp_path / "t2.ideal.json"
    p.write_text('{"dim": 1, "generators": [[2]]}')
    assert call("contact", p, "--p", 3)[1].strip() == "codim Cont^3 = EMPTY"


def test_glct_both_routes():
    base = ("glct", f("cusp.ideal.json"), "--aux", f("x.ideal.json"), "--beta", "1")
    assert call(*base)[1].splitlines()[0] == "glct = 4/3"
    assert call(*base, "--via", "cylinders")[1].splitlines()[:2] == ["glct = 4/3", "witness cylinder q = (3,2)"]


def test_multiplier():
    out = call("multiplier", f("cusp.ideal.json"), "--alpha", "1")[1]
    assert "minimal generators: (0,1) (1,0)" in out
    assert "unit ideal: yes" in call("multiplier", f("cusp.ideal.json"), "--alpha", "1/2")[1]


def test_resolution_subcommands():
    assert call("contact-res", f("cusp.res.json"), "--p", 6)[1].strip() == "codim Cont^6 = 5"
    assert call("contact-res", f("cusp.res.json"), "--p", 5)[1].strip() == "codim Cont^5 = EMPTY"
    out = call("decompose", f("cusp.res.json"), "--p", 6)[1].splitlines()
    assert out[2:] == ["(0,0,1)\t5\t{E3}\t1", "(0,2,0)\t6\t{E2}\t2", "(3,0,0)\t6\t{E1}\t3"]
    out = call("components", f("cusp.res.json"), "--p", 6)[1]
    assert "computing divisors: E3" in out and "(0,0,1)\t5" in out
    out = call("valuation", f("cusp.res.json"), "--nu", "0,0,2")[1]
    assert "primitive = (0,0,1)" in out and "multiplicity = 2" in out
    assert "yes" in call("rationality", f("lci-rational.res.json"), "--f", 2)[1]
    assert "divisor 2" in call("rationality", f("lci-nonrational.res.json"), "--f", 2)[1]


def test_toric_bridge():
    out = call("toric-bridge", f("cusp.ideal.json"), "--rays", "3,2", "1,1")[1]
    assert "D(3,2)\t6\t4\t0" in out and "= 5/6" in out


def test_json_format_mirrors_text():
    code, out, _ = call("--format", "json", "contact", f("cusp.ideal.json"), "--p", 6)
    assert json.loads(out) == {"codim": 5, "minimizers": [[3, 2]]}
    code, out, _ = call("lct", f("cusp.ideal.json"), "--format", "json")
    assert json.loads(out) == {"lct": "5/6", "witness_facet_normal": [3, 2]}


@pytest.mark.parametrize("argv", [
    ("glct", "cusp.ideal.json", "--aux", "x.ideal.json", "--beta", "0.5"),
    ("multiplier", "cusp.ideal.json", "--alpha", "0"),
    ("contact", "cusp.ideal.json", "--p", "0"),
    ("lct", "missing.ideal.json"),
    ("valuation", "cusp.res.json", "--nu", "1,1,0"),
    ("rationality", "cusp.res.json", "--f", "2"),
    ("decompose", "cusp.ideal.json", "--p", "2"),
])
def test_validation_errors_exit_2(argv):
    args = [str(FIXTURES / a) if a.endswith(".json") else a for a in argv]
    code, out, err = call(*args)
    assert code == 2 and out == ""


def test_parse_error_is_line_addressed(tmp_path):
    p = tmp_path / "bad.ideal.json"
    p.write_text('{"dim": 2,\n "generators": [[1, 0],\n [0, 0]]}')
    code, _, err = call("lct", p)
    assert code == 2 and f"{p}:3:" in err


def test_warning_goes_to_stderr(tmp_path):
    p = tmp_path / "dup.ideal.json"
    p.write_text('{"dim": 2, "generators": [[2, 0], [0, 3], [2, 3]]}')
    code, out, err = call("lct", p)
    assert out.startswith("lct = 5/6") and "dropped non-minimal generator [2, 3]" in err


def test_check_detects_mismatch(monkeypatch):
    from arcloci import arcs

    monkeypatch.setattr(arcs, "lct_via_arcs", lambda a: (0, 1))
    code, out, _ = call("check", f("cusp.ideal.json"))
    assert code == 1 and "FAIL  lct: facet route = arc route" in out


def test_module_entry_point_deterministic():
    cmd = [sys.executable, "-m", "arcloci", "check", str(f("mixed3.ideal.json"))]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout
