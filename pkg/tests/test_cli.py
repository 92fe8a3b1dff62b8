import io
import json
import subprocess
import sys

import pytest

from cubicline import cli


def run(*argv):
    buf = io.StringIO()
    code = cli.run(list(argv), out=buf)
    return code, buf.getvalue()


def run_json(*argv):
    code, text = run("--format", "json", *argv)
    doc = json.loads(text)
    assert doc["schema"] == 1 and doc["exit"] == code
    return code, doc


def test_classify_triangle():
    code, text = run("classify", "x0*x1*x2", "x0+x1+x2")
    assert code == 0
    assert "Stable" in text and "row 3" in text
    code, doc = run_json("classify", "x0*x1*x2", "x0+x1+x2")
    assert doc["result"][0]["status"] == "Stable" and doc["result"][0]["row"] == 3


def test_group_order():
    code, text = run("hesse", "group", "--order")
    assert code == 0 and text.strip() == "216"


def test_mu():
    code, text = run("mu", "x0^2*x2+x1^3", "x2", "--r", "3,1,-4")
    assert code == 0 and text.strip().endswith("-1")
    code, doc = run_json("mu", "x0^2*x2+x1^3", "x2", "--r", "3,1,-4")
    assert doc["result"][0]["mu"] == -1


def test_parse_error_exit():
    code, _ = run("classify", "x0^2", "x0")
    assert code == 2
    code, doc = run_json("classify", "x0^3+", "x0")
    assert code == 2 and "error" in doc


def test_irrational_exit():
    code, _ = run("classify", "x0^3+2*x1^3+4*x2^3-6*x0*x1*x2", "x0")
    assert code == 3


def test_verification_exit():
    # smooth pair has no listed normal form
    assert run("normal-form", "x0^3+x1^3+x2^3", "x0+2*x1+5*x2")[0] == 4
    assert run("witness", "x0*x1*x2", "x0+x1+x2")[0] == 4


def test_unknown_subcommand_rejected():
    with pytest.raises(SystemExit):
        cli.run(["frobnicate"], out=io.StringIO())


def test_file_input(tmp_path):
    f = tmp_path / "pairs.txt"
    f.write_text("field: Q(w)\n# two rows\nx0*x1*x2 ; x0+x1+x2\n"
                 "x0*(x0*x2+x1^2) ; x2\n")
    code, doc = run_json("classify", "--file", str(f))
    assert code == 0
    assert [r["row"] for r in doc["result"]] == [3, 7]


def test_file_field_header_after_pair(tmp_path):
    f = tmp_path / "pairs.txt"
    f.write_text("x0*x1*x2 ; x0+x1+x2\nfield: Q(w)\n")
    assert run("classify", "--file", str(f))[0] == 2


@pytest.mark.parametrize("argv", [
    ("worst-1ps", "x0^2*x2+x1^3", "x2"),
    ("witness", "x1^3+x2^3", "x0"),
    ("normal-form", "x0*x1*x2", "2*x0+3*x1+5*x2"),
    ("wcusp", "x0*x2^2-x1^3", "x0-x1-x2"),
    ("hesse", "orbit", "5"),
    ("hesse", "j", "2"),
    ("hesse", "incidence"),
    ("atlas", "verify-phi", "--chart", "2", "--samples", "3"),
    ("atlas", "verify-psi", "--chart", "3", "--samples", "3"),
    ("atlas", "strata", "--family", "psi", "--chart", "1"),
    ("atlas", "transitions", "--pair", "1,2", "--samples", "3"),
    ("family", "limits", "--which", "identification"),
])
def test_subcommands_succeed_and_are_deterministic(argv):
    a = run_json("--seed", "4", *argv)
    b = run_json("--seed", "4", *argv)
    assert a[0] == 0 and a == b


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "cubicline", "hesse", "j", "0"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip().endswith("0")
