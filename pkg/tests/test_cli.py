import json
import subprocess
import sys

import pytest

from fullerene5.cli import main
from fullerene5.connectivity import find_cyclic_5_cutsets_exhaustive
from fullerene5.formats import read_planar_code, read_text_rotation, write_text_rotation

from conftest import DATA, GOLDEN, tube


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("r", [0, 1, 2])
def test_analyze_matches_golden(capsys, r):
    code, out, _ = run(capsys, "analyze", "--nanotube", str(r))
    assert code == 0
    assert out == (GOLDEN / f"analyze_r{r}.json").read_text()


@pytest.mark.parametrize("r", [0, 1, 2])
def test_golden_cutset_census_agrees_with_exhaustive_search(r):
    golden = json.loads((GOLDEN / f"analyze_r{r}.json").read_text())
    cuts = find_cyclic_5_cutsets_exhaustive(tube(r))
    assert golden["cyclic_5_cutsets"]["total"] == len(cuts)
    nontrivial = sorted([list(e) for e in c.edges] for c in cuts if not c.is_trivial)
    assert sorted(golden["cyclic_5_cutsets"]["nontrivial_edges"]) == nontrivial


def test_validate_file(capsys):
    code, out, _ = run(capsys, "validate", str(DATA / "dodecahedron.txt"))
    assert code == 0 and json.loads(out)["is_fullerene"] is True


def test_validate_rejects_cube(tmp_path, capsys):
    from fullerene5.generator import cube

    path = tmp_path / "cube.txt"
    path.write_bytes(write_text_rotation(cube()))
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 1 and json.loads(out)["other_face_count"] == 6


def test_planar_code_autodetected(capsys):
    code, out, _ = run(capsys, "analyze", str(DATA / "c60.pc"))
    rep = json.loads(out)
    assert code == 0
    assert rep["decomposition"] is None and rep["pentacaps"] == 0


def test_hamilton_report(capsys):
    code, out, _ = run(capsys, "hamilton", "--nanotube", "3")
    rep = json.loads(out)
    assert code == 0 and rep["verified"] and rep["pentagon_count"] == 4
    assert rep["variant_count"] >= rep["hamilton_bound"] == 20
    assert sorted(rep["cycle"]) == list(range(50))


def test_hamilton_on_non_nanotube_fails(capsys):
    code, out, _ = run(capsys, "hamilton", str(DATA / "c60.pc"))
    assert code == 1 and json.loads(out)["nanotube"] is False


def test_matchings_report(capsys):
    code, out, _ = run(capsys, "matchings", "--nanotube", "2")
    assert code == 0
    assert json.loads(out) == {"exact": 701, "matching_bound": 60, "n": 40, "prior_bound": 32}


def test_matchings_over_budget_reports_no_count(capsys):
    code, out, _ = run(capsys, "matchings", "--nanotube", "2", "--max-oracle-n", "30")
    assert code == 0 and json.loads(out)["exact"] is None


def test_oracle_passes_on_small_tube(capsys):
    code, out, _ = run(capsys, "oracle", "--nanotube", "1")
    rep = json.loads(out)
    assert code == 0 and rep["passed"]
    assert rep["checks"]["variants_within_oracle"]


def test_oracle_flags_dodecahedron_disagreement(capsys):
    # the r=0 tube decomposes but has no nontrivial cyclic 5-cutset
    code, out, _ = run(capsys, "oracle", "--nanotube", "0")
    rep = json.loads(out)
    assert code == 1
    assert rep["checks"]["decomposition_iff_nontrivial_cutset"] is False


def test_generate_round_trips(tmp_path, capsys):
    out_text = tmp_path / "t.txt"
    out_pc = tmp_path / "t.pc"
    assert run(capsys, "generate", "--nanotube", "4", "--out", str(out_text))[0] == 0
    assert run(capsys, "generate", "--nanotube", "4", "--format", "planar_code", "--out", str(out_pc))[0] == 0
    assert read_text_rotation(out_text.read_bytes()) == tube(4)
    assert read_planar_code(out_pc.read_bytes()) == [tube(4)]


def test_out_flag_writes_report(tmp_path, capsys):
    target = tmp_path / "rep.json"
    code, out, _ = run(capsys, "validate", "--nanotube", "1", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["n"] == 30


@pytest.mark.parametrize("argv", [
    ["validate"],
    ["validate", "--nanotube", "-1"],
    ["validate", "nowhere.txt"],
    ["validate", str(DATA / "dodecahedron.txt"), "--nanotube", "1"],
    ["oracle", "--nanotube", "1", "--max-oracle-n", "0"],
    ["analyze", str(DATA / "c60.pc"), "--index", "3"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


def test_malformed_file_exits_1(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("3\n0: 1 2\n")
    code, _, err = run(capsys, "validate", str(path))
    assert code == 1 and "invalid input" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fullerene5", "validate", "--nanotube", "0"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["pentagon_count"] == 12
