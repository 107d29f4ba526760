import io
import json
import math
import subprocess
import sys
from pathlib import Path

import pytest

from stairchambers.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdin=io.StringIO(stdin), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_verify_k4():
    code, out, err = run("verify", "--k", "4")
    assert code == 0
    assert out == "chambers=24 simple=16 stairs=32 taut=pass\n"
    assert "PASS chambers" in err


def test_verify_reports_failures_with_exit_2():
    # Some favorite conditions at k=3 are generic, so that check fails.
    code, out, err = run("verify", "--k", "3")
    assert code == 2
    assert out == "chambers=6 simple=6 stairs=12 taut=pass\n"
    assert "FAIL favorite" in err


def test_verify_out_of_range():
    assert run("verify", "--k", "12")[0] == 1


def test_stability():
    code, out, _ = run(
        "stability",
        "--k", "3",
        "--theta", '{"k":3,"values":["-4","2","2"]}',
        "--stair", '{"k":3,"first_rep":1,"steps":"DD"}',
    )
    assert (code, out) == (0, "STABLE\n")


def test_stability_k_mismatch():
    code, _, err = run(
        "stability",
        "--k", "4",
        "--theta", '{"k":3,"values":["-4","2","2"]}',
        "--stair", '{"k":3,"first_rep":1,"steps":"DD"}',
    )
    assert code == 1 and "does not match" in err


def test_chamber_of_not_generic():
    code, out, err = run("chamber-of", "--k", "3", "--theta", '{"k":3,"values":["0","1","-1"]}')
    assert code == 1
    assert out == ""
    assert "strictly semistable" in err


def test_chamber_of():
    code, out, _ = run("chamber-of", "--k", "3", "--theta", '{"k":3,"values":["-4","2","2"]}')
    doc = json.loads(out)
    assert code == 0
    assert (doc["first_rep"], doc["offsets"]) == (1, [1, 1])
    assert doc["theta"] == ["-4", "2", "2"]


def test_bad_theta_sum():
    assert run("chamber-of", "--k", "3", "--theta", '{"k":3,"values":["1","1","1"]}')[0] == 1


def test_stairs_lines():
    code, out, _ = run("stairs", "--k", "3")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 12
    assert json.loads(lines[0]) == {"kind": "stair", "schema_version": 1, "k": 3, "first_rep": 0, "steps": "DD"}


@pytest.mark.parametrize("argv,n", [(("chambers", "--k", "4"), 24), (("chambers", "--k", "4", "--simple"), 16), (("simple-chambers", "--k", "5"), 40)])
def test_chamber_lists(argv, n):
    code, out, _ = run(*argv)
    assert code == 0 and len(out.splitlines()) == n


def test_fibers():
    code, out, _ = run("fibers", "--chamber", '{"k":2,"first_rep":1,"offsets":[1]}')
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert doc["charts"][0]["survivors"] == [[0, 0], [0, 1]]


def test_render_json_normalizes():
    code, out, _ = run("render", "--format", "json", stdin='{"k":3,"values":["-8/2","2","2"]}')
    assert code == 0
    assert json.loads(out)["values"] == ["-4", "2", "2"]


def test_render_theta_as_ascii_is_invalid():
    assert run("render", "--format", "ascii", stdin='{"k":3,"values":["-4","2","2"]}')[0] == 1


def test_render_empty_input():
    assert run("render", "--format", "svg", stdin="")[0] == 1


@pytest.mark.parametrize("argv", [("--bogus",), ("stairs", "--k", "3", "--bogus"), ("stairs",), ("render", "--format", "png")])
def test_usage_errors(argv):
    code, _, err = run(*argv)
    assert code == 1
    assert "usage" in err


def test_degenerate_group():
    code, _, err = run("stairs", "--k", "1")
    assert code == 1 and "at least 2" in err


@pytest.mark.parametrize(
    "doc,golden",
    [
        ('{"k":3,"first_rep":1,"offsets":[1,1]}', "cg_k3_chamber"),
        ('{"k":5,"first_rep":1,"offsets":[3,4,2,2]}', "gluing_k5_chamber"),
    ],
)
@pytest.mark.parametrize("fmt,ext", [("ascii", "txt"), ("svg", "svg")])
def test_render_subprocess_golden(doc, golden, fmt, ext):
    proc = subprocess.run(
        [sys.executable, "-m", "stairchambers", "render", "--format", fmt],
        input=doc,
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout == (GOLDEN / f"{golden}.{ext}").read_text()


def test_module_entry_point_exit_code():
    proc = subprocess.run(
        [sys.executable, "-m", "stairchambers", "chambers", "--k", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert len(proc.stdout.splitlines()) == math.factorial(3)
