import json
import os
import shutil
import subprocess
import sys

import pytest

from linkage.cli import main

from conftest import CORPUS

MODS = os.path.join(CORPUS, "modules")
INSTS = os.path.join(CORPUS, "instances")


def mod(name):
    return os.path.join(MODS, name + ".mod")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--format", "json", *argv)
    return code, json.loads(out)


def test_link_check_exit_codes(capsys):
    code, obj = run_json(capsys, "link-check", mod("hyp_x"))
    assert code == 0 and obj["verdict"] is True
    code, obj = run_json(capsys, "link-check", mod("k2"))
    assert code == 1 and obj["obstruction"]["length"] == 1


def test_lambda_and_invariants(capsys):
    code, obj = run_json(capsys, "lambda", mod("hyp_x"))
    assert code == 0
    assert obj["betti"] == [[0, 0, 1], [1, 1, 1]]
    code, obj = run_json(capsys, "invariants", mod("x2xy"))
    assert (obj["dim"], obj["depth"]) == (1, 0)


def test_format_flag_after_subcommand(capsys):
    code, obj = run_json(capsys, "invariants", mod("k2"))
    code2, out, _ = run(capsys, "invariants", mod("k2"), "--format", "json")
    assert json.loads(out) == obj


def test_text_output(capsys):
    code, out, _ = run(capsys, "resolve", mod("k3"))
    assert code == 0
    assert out.splitlines()[1].split() == ["0:", "1", "3", "3", "1"]


def test_functor_commands(capsys):
    assert run_json(capsys, "ext", "2", mod("k2"))[1]["rows"] == [-2]
    assert run_json(capsys, "tor", "1", mod("k2"), mod("k2"))[1]["hilbert"]["numerator"] == [[1, 2], [2, -4], [3, 2]]
    assert run_json(capsys, "hom", mod("hyp_x"))[1]["rows"] == [1]
    code, obj = run_json(capsys, "canonical", os.path.join(CORPUS, "rings", "cubic.ring"))
    assert code == 0 and obj["gorenstein"] is False and obj["rows"] == [1, 1]
    assert run_json(capsys, "transpose", mod("k2"))[1]["rows"] == [-1, -1]
    assert run_json(capsys, "omega", mod("k3"), "-k", "2")[1]["rows"] == [2, 2, 2]
    assert run_json(capsys, "tfunctor", mod("k2"), "-i", "2")[1]["rows"] == [-2]


def test_check_command(capsys):
    code, obj = run_json(capsys, "check", "seqcm-ext", mod("x2xy"))
    assert code == 0 and obj["verdict"]
    code, obj = run_json(capsys, "check", "cm", mod("x2xy"))
    assert code == 1 and not obj["verdict"]


def test_link_by_ideal(capsys, tmp_path):
    f = tmp_path / "m.mod"
    f.write_text("vars x y\nrows 0\nmatrix [x]\n")
    code, obj = run_json(capsys, "link-by-ideal", str(f), "--ideal", "x*y")
    assert code == 0
    assert obj["ring"]["ideal"] == ["x*y"]
    assert obj["lambda"]["matrix"] == [["y"]]
    code, _, err = run(capsys, "link-by-ideal", str(f), "--ideal", "y^2")
    assert code == 2 and "precondition" in err


def test_verify_single(capsys):
    code, obj = run_json(capsys, "verify", "cor-3.2", os.path.join(INSTS, "cor-3.2__k2.toml"))
    assert code == 0 and obj["verdict"] == "pass"
    code, obj = run_json(capsys, "verify", "thm-3.3", os.path.join(INSTS, "thm-3.3__sr_free.toml"))
    assert code == 2 and obj["verdict"] == "hypotheses-not-met"
    code, obj = run_json(capsys, "verify", "thm-2.11", os.path.join(INSTS, "thm-2.11__cubic_omega.toml"))
    assert code == 1 and obj["verdict"] == "fail"


@pytest.mark.parametrize(
    "argv",
    [
        ["invariants", "/no/such/file.mod"],
        ["verify", "cor-3.2", os.path.join(INSTS, "thm-2.5__x2xy.toml")],
        ["verify", "thm-9.9", os.path.join(INSTS, "thm-2.5__x2xy.toml")],
        ["verify"],
        ["frobnicate"],
        ["ext", "x", mod("k2")],
        ["check", "nonsense", mod("k2")],
    ],
)
def test_input_errors_exit_3(capsys, argv):
    assert run(capsys, *argv)[0] == 3


def test_malformed_module_exit_3(capsys, tmp_path):
    f = tmp_path / "bad.mod"
    f.write_text("vars x y\nrows 0\nmatrix [x + y^2]\n")
    code, _, err = run(capsys, "invariants", str(f))
    assert code == 3 and "not homogeneous" in err


def test_resource_cap_exit_4(capsys):
    code, _, err = run(capsys, "--max-degree", "2", "resolve", mod("cubic_omega"))
    assert code == 4 and "cap" in err


def test_gen_commands(capsys):
    code, obj = run_json(capsys, "--seed", "170", "gen", "shellable", "-n", "4", "--mixed")
    assert obj["facets"] == [[1, 2, 3], [3, 4]]
    code, obj = run_json(capsys, "gen", "sr", "-n", "4", "--facets", "1 2 3; 3 4")
    assert obj["ring"]["ideal"] == ["x1*x4", "x2*x4"]
    code, obj = run_json(capsys, "--seed", "1", "gen", "random")
    assert obj["matrix"] == [["y^2", "x^2*y"]]
    code, out, _ = run(capsys, "gen", "sr", os.path.join(CORPUS, "complexes", "two_edges.facets"))
    assert code == 0
    assert out.splitlines()[-1] == "ideal x1*x3, x1*x4, x2*x3, x2*x4"


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


@pytest.mark.skipif(shutil.which("lk") is None, reason="console script not installed")
def test_console_script_roundtrip():
    p = subprocess.run(
        ["lk", "--format", "json", "link-check", mod("hyp_y")], capture_output=True, text=True
    )
    assert p.returncode == 0
    assert json.loads(p.stdout)["verdict"] is True


def test_module_entry_point():
    p = subprocess.run(
        [sys.executable, "-m", "linkage.cli", "link-check", mod("k2")], capture_output=True, text=True
    )
    assert p.returncode == 1
