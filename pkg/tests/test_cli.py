import json
import subprocess
import sys
from fractions import Fraction

import pytest

from tlft.cli import main
from tlft.cyclotomic import CycScalar

from conftest import FIXTURE_DIR


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def value(report):
    return CycScalar.from_json(report["value"])


def fx(name):
    return FIXTURE_DIR / name


def test_validate(capsys):
    code, rep = run(capsys, "validate", fx("s3.tri"))
    assert code == 0
    assert rep["f_vector"] == [5, 10, 10, 5]
    assert rep["euler_characteristic"] == 0 and rep["orientable"] and rep["connected"]
    code, rep = run(capsys, "validate", fx("klein.tri"))
    assert code == 0 and rep["orientable"] is False


def test_invariant_dw3(capsys):
    code, rep = run(capsys, "invariant", "--dim", 3, "--complex", fx("s3.tri"), "--group", "Z2",
                    "--cocycle", "trivial")
    assert code == 0
    assert value(rep).to_fraction() == Fraction(1, 2)


def test_invariant_2d_algebra_file(capsys):
    code, rep = run(capsys, "invariant", "--dim", 2, "--complex", fx("s2.tri"),
                    "--algebra", fx("z2grp.alg"))
    assert code == 0
    assert value(rep).to_fraction() == 2


def test_invariant_4d_trivial_group(capsys):
    code, rep = run(capsys, "invariant", "--dim", 4, "--complex", fx("s4.tri"), "--group", "Z1")
    assert code == 0
    assert value(rep).to_fraction() == 1
    assert rep["dual"]["dual_vertices"] == 6


def test_invariant_cubic_file_and_order(capsys):
    _, a = run(capsys, "invariant", "--complex", fx("s2xs1.tri"), "--group", "Z2",
               "--cocycle", fx("cubic_z2.dw3"))
    _, b = run(capsys, "invariant", "--complex", fx("s2xs1.tri"), "--group", "Z2",
               "--cocycle", "cubic")
    assert a["value"] == b["value"]


def test_pachner_walk(capsys):
    code, rep = run(capsys, "pachner", "--complex", fx("s3.tri"), "--group", "Z2",
                    "--cocycle", "cubic", "--steps", 10, "--seed", 3, "--max-facets", 40)
    assert code == 0 and rep["equal"] is True
    assert len(rep["moves"]) == 10


def test_pachner_zero_moves(capsys):
    code, rep = run(capsys, "pachner", "--complex", fx("s2.tri"), "--steps", 0)
    assert code == 0 and rep["equal"] is True and rep["moves"] == []


def test_pachner_cap_rejections(capsys, tmp_path):
    out = tmp_path / "walk.tri"
    code, rep = run(capsys, "pachner", "--complex", fx("s2.tri"), "--steps", 30, "--seed", 2,
                    "--max-facets", 6, "--output", out)
    assert code == 0 and rep["rejected"] and rep["facets_after"] <= 6
    code, rep = run(capsys, "validate", out)
    assert code == 0


def test_cocycle_check_trivial(capsys):
    code, rep = run(capsys, "cocycle", "check", "trivial", "--group", "Z2", "-N", 2)
    assert code == 0 and rep["violations"] == 0


def test_cocycle_check_broken(capsys):
    code, rep = run(capsys, "cocycle", "check", fx("broken.cyc"))
    assert code == 1
    assert rep["violations"] > 0
    name, idx = rep["condition_violations"][0]
    assert isinstance(name, str) and all(isinstance(i, int) for i in idx)


def test_cocycle_search(capsys, tmp_path):
    code, rep = run(capsys, "cocycle", "search", "--group", "Z2", "-N", 2, "--symmetries",
                    "--output", tmp_path)
    assert code == 0 and rep["all_pass_recheck"] is True
    assert rep["generators"] == len(rep["basis"]) == len(list(tmp_path.glob("*.cyc")))
    for f in sorted(tmp_path.glob("*.cyc")):
        code, chk = run(capsys, "cocycle", "check", f)
        assert code == 0 and chk["violations"] == 0


def test_dual_stats(capsys):
    code, rep = run(capsys, "dual", "--complex", fx("s4.tri"))
    assert code == 0
    assert rep["dual_polygons"] == 20 and rep["polygon_triangles"] == 20
    assert rep["cone_tetrahedra"] == 60 and rep["interior_vertices"] == 15


def test_budget_exit_code(capsys):
    code, rep = run(capsys, "invariant", "--complex", fx("s4.tri"), "--group", "Z2",
                    "--gauge", "none", "--budget", 10)
    assert code == 2 and rep["error"] == "budget"


@pytest.mark.parametrize("argv", [
    ["invariant", "--complex", "missing.tri"],
    ["invariant", "--complex", str(FIXTURE_DIR / "s3.tri"), "--dim", "4"],
    ["invariant", "--complex", str(FIXTURE_DIR / "s3.tri"), "--order", "0 1 2"],
    ["invariant", "--complex", str(FIXTURE_DIR / "s4.tri"), "--cocycle",
     str(FIXTURE_DIR / "broken.cyc")],
    ["cocycle", "search"],
])
def test_validation_errors_exit_1(capsys, argv):
    code, rep = run(capsys, *argv)
    assert code == 1 and "error" in rep and rep["message"]


def test_output_is_byte_stable(capsys):
    argv = ["--no-timing", "pachner", "--complex", str(fx("s3.tri")), "--group", "Z2",
            "--cocycle", "cubic", "--steps", 5, "--seed", 9]
    main([str(a) for a in argv])
    first = capsys.readouterr().out
    main([str(a) for a in argv])
    assert capsys.readouterr().out == first
    assert "seconds" not in json.loads(first)


def test_timing_reported_by_default(capsys):
    _, rep = run(capsys, "validate", fx("s2.tri"))
    assert "seconds" in rep


def test_explicit_order_flag(capsys):
    _, a = run(capsys, "invariant", "--complex", fx("s4.tri"), "--group", "Z2",
               "--order", "5 3 1 0 2 4", "--threads", 2)
    _, b = run(capsys, "invariant", "--complex", fx("s4.tri"), "--group", "Z2")
    assert a["value"] == b["value"]


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "tlft.cli", "--no-timing", "validate",
                        str(fx("s2.tri"))], capture_output=True, text=True, check=False)
    assert r.returncode == 0
    assert json.loads(r.stdout)["euler_characteristic"] == 2
