import json
import subprocess
import sys

import pytest
from conftest import APERIODIC_A, ADDER_PROGRAM

from addsys.cli import main

BALANCED = {"kind": "explicit", "levels": [{"base": 3, "digits": [-1, 0, 1]}]}
DOUBLED = {"kind": "explicit", "levels": [{"base": 3, "digits": [-2, 0, 2]}]}
DECIMAL = {"kind": "british", "bases": [10]}
EX_3_8 = {
    "kind": "explicit",
    "levels": [{"base": 2, "digits": [0, 1]}, {"base": 4, "digits": [0, 1, -2, 3]}, {"base": 3, "digits": [0, 1, -1]}],
    "cycle_from": 2,
}


def run_cli(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_expand(capsys, write_json):
    code, out, _ = run_cli(capsys, "expand", write_json("bt.json", BALANCED), "--", -35)
    assert code == 0
    assert out.splitlines()[0] == "-35 = 1 + 0 + (-9) + (-27)"
    assert "check: sum of terms = -35 (ok)" in out

    code, out, _ = run_cli(capsys, "expand", write_json("dec.json", DECIMAL), 538)
    assert code == 0 and out.startswith("538 = 8 + 30 + 500\n")

    code, out, _ = run_cli(capsys, "expand", write_json("dec.json", DECIMAL), 0, "--json")
    payload = json.loads(out)
    assert code == 0 and payload["terms"] == [] and payload["depth"] == 0 and payload["status"] == "zeroed"


def test_expand_exhausted(capsys, write_json):
    code, out, _ = run_cli(capsys, "expand", write_json("d.json", DOUBLED), 1, "--depth", 10)
    assert code == 2 and "exhausted after 10 steps" in out


def test_bad_spec_file(capsys, tmp_path, write_json):
    code, _, err = run_cli(capsys, "expand", str(tmp_path / "missing.json"), 1)
    assert code == 1 and "cannot read" in err
    bad = write_json("bad.json", {"kind": "british", "bases": [1]})
    code, _, err = run_cli(capsys, "expand", bad, 1)
    assert code == 1 and "$.bases[0]" in err


def test_trajectory(capsys, write_json):
    code, out, _ = run_cli(capsys, "trajectory", write_json("bt.json", BALANCED), "--json", "--", -35)
    payload = json.loads(out)
    assert code == 0 and payload["values"] == [-35, -12, -4, -1, 0] and payload["captured_at"] == 4


def test_probe(capsys, write_json):
    collatz = write_json("c.json", {"kind": "collatz"})
    code, out, _ = run_cli(capsys, "probe", collatz, "--lo", -1000, "--hi", 1000, "--depth", 200)
    assert code == 0 and out.startswith("2001/2001 resolved")

    code, out, _ = run_cli(capsys, "probe", write_json("d.json", DOUBLED), "--lo", -10, "--hi", 10, "--depth", 60, "--json")
    payload = json.loads(out)
    assert code == 2
    assert payload["unresolved"] == [n for n in range(-10, 11) if n % 2]
    assert set(payload) == {"lo", "hi", "max_depth", "total", "resolved", "unresolved", "depth_histogram"}

    code, out, _ = run_cli(capsys, "probe", collatz, "--lo", 0, "--hi", 0)
    assert code == 0 and out.startswith("1/1 resolved")

    code, _, err = run_cli(capsys, "probe", collatz, "--lo", 3, "--hi", 2)
    assert code == 1


def test_fractran(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "fractran", ADDER_PROGRAM, 8)
    lines = out.splitlines()
    assert code == 0 and lines == ["8 28 40 66 30 39 26 91 130 169", "HALTED"]

    code, out, _ = run_cli(capsys, "fractran", "2/1", 1, "--max-steps", 10)
    lines = out.splitlines()
    assert len(lines[0].split()) == 11 and lines[1] == "BUDGET"

    code, out, _ = run_cli(capsys, "fractran", ADDER_PROGRAM, 0)
    assert out.splitlines() == ["0", "HALTED"]

    prog = tmp_path / "prog.txt"
    prog.write_text("(33/20, 5/11, 13/10, 1/5, 2/3, 10/7, 7/2)\n")
    code, out, _ = run_cli(capsys, "fractran", prog, 32, "--json")
    assert json.loads(out)["values"][-1] == 169

    code, _, err = run_cli(capsys, "fractran", "3/2 1/0", 5)
    assert code == 1 and "position 4" in err


def test_factor(capsys, write_json):
    code, out, _ = run_cli(capsys, "factor", write_json("a.json", [[0, 1, 2, 3]]))
    assert code == 0 and out.splitlines()[0] == "bases: 4"
    code, out, _ = run_cli(capsys, "factor", write_json("b.json", [[0, 1], [0, 2, 4, 6], [0, 8, 16]]), "--json")
    assert json.loads(out) == {"bases": [2, 4, 3], "grouping": [[0], [1], [2]]}
    code, out, _ = run_cli(capsys, "factor", write_json("c.json", [[0, 1, 2], [0, 1]]))
    assert code == 2 and "witness: 2 = " in out
    code, _, err = run_cli(capsys, "factor", write_json("d.json", {"sets": []}))
    assert code == 1


def test_check_direct(capsys, write_json):
    sets = write_json("ap.json", [APERIODIC_A, [0, 18], [0, 8, 16]])
    code, out, _ = run_cli(capsys, "check-direct", sets, "--modulus", 72, "--json")
    payload = json.loads(out)
    assert code == 0 and payload == {"direct": True, "size": 72, "tuples": 72, "tiles_mod": True}
    code, out, _ = run_cli(capsys, "check-direct", write_json("nd.json", [[0, 1, 2], [0, 1]]))
    assert code == 2 and "not direct" in out


def test_render(capsys, tmp_path, write_json):
    spec = write_json("e.json", EX_3_8)
    code, out, _ = run_cli(capsys, "render", spec, "--depth", 2, "--lo", -10, "--hi", 25)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert lines[2].split()[-1] == "······10··*010··10··················"

    svg = tmp_path / "strip.svg"
    run_cli(capsys, "render", spec, "--format", "svg", "-o", svg)
    first = svg.read_bytes()
    run_cli(capsys, "render", spec, "--format", "svg", "-o", svg)
    assert svg.read_bytes() == first and first.startswith(b"<?xml")

    collatz = write_json("c.json", {"kind": "collatz"})
    code, _, err = run_cli(capsys, "render", collatz, "--depth", 4)
    assert code == 1 and "budget" in err


def test_decide_and_verify(capsys, write_json):
    bt = write_json("bt.json", BALANCED)
    assert run_cli(capsys, "decide-consecutive", bt)[:2] == (0, "complete\n")
    assert run_cli(capsys, "decide-consecutive", write_json("d.json", DECIMAL))[:2] == (2, "incomplete\n")
    assert run_cli(capsys, "verify-tail", bt, "--k", 1, "--window", 20, "--depth", 30)[0] == 0
    assert run_cli(capsys, "verify-tail", write_json("dd.json", DOUBLED), "--k", 1, "--window", 5)[0] == 2


def test_build(capsys):
    code, out, _ = run_cli(capsys, "build", "collatz")
    assert code == 0 and json.loads(out) == {"kind": "collatz"}
    code, out, _ = run_cli(capsys, "build", "fractran", "--program", "(3/2, 4/6)")
    assert json.loads(out) == {"kind": "fractran", "program": "3/2 2/3"}
    assert run_cli(capsys, "build", "fractran")[0] == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "addsys", "fractran", "3/2", "4"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout.split() == ["4", "6", "9", "HALTED"]


@pytest.mark.parametrize("argv", [[], ["nope"]])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 1
