"""Exit codes, report formats, golden comparisons, and determinism."""

import json

import pytest

from detpres.cli import main

HEXAGON_FILE = "src/detpres/data/hexagon.json"
SQUARE_FILE = "src/detpres/data/unit_square.json"
PLUCKER_O1 = "src/detpres/data/plucker_o1.json"
PLUCKER_O2 = "src/detpres/data/plucker_o2.json"


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code, out, err = run(capsys, argv + ["--format", "json"])
    return code, json.loads(out) if out.strip() else None, err


# -- segre ---------------------------------------------------------------------


def test_segre_positive_case(capsys):
    code, data, _ = run_json(
        capsys,
        ["segre", "--dims", "1,1,1", "--multidegree", "2,1,1",
         "--split", "1,1,0", "--section-order", "lex"],
    )
    assert code == 0
    assert data["verdict"] == "DET_PRESENTED"
    assert data["dim_I2"] == 33
    assert data["omega"][0]["entries"][0] == ["y0", "y1", "y4", "y5"]


def test_segre_all_splits_fail_individually(capsys):
    code, data, _ = run_json(
        capsys,
        ["segre", "--dims", "1,1,1", "--multidegree", "1,1,1", "--splits", "all"],
    )
    assert code == 1
    assert [r["verdict"] for r in data["runs"]] == ["NOT_BY_THIS_SPLIT"] * 3


def test_segre_pooled_splits_pass(capsys):
    code, data, _ = run_json(
        capsys,
        ["segre", "--dims", "1,1,1", "--multidegree", "1,1,1",
         "--splits", "all", "--pool"],
    )
    assert code == 0
    assert data["verdict"] == "GENERATED_BY_MULTIPLE"
    assert data["minor_count"] == 18
    assert data["minor_span_dim"] == 9


def test_segre_conic(capsys):
    code, data, _ = run_json(
        capsys, ["segre", "--dims", "1", "--multidegree", "2", "--split", "1"]
    )
    assert code == 0
    assert data["minor_count"] == 1


def test_segre_requires_split_flags(capsys):
    code, _, err = run(capsys, ["segre", "--dims", "1", "--multidegree", "2"])
    assert code == 65
    assert "split" in err


def test_segre_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        main(["segre", "--dims", "1,1"])  # missing --multidegree
    assert info.value.code == 64


# -- toric ----------------------------------------------------------------------


def test_toric_del_pezzo(capsys):
    code, data, _ = run_json(
        capsys,
        ["toric", HEXAGON_FILE, "--dilation", "2", "--split", "1", "1"],
    )
    assert code == 0
    assert data["verdict"] == "DET_PRESENTED"
    assert data["dim_I2"] == 129
    assert data["omega"][0]["rows"] == 7


def test_toric_dilation_one_has_no_split(capsys):
    code, _, err = run(
        capsys, ["toric", HEXAGON_FILE, "--dilation", "1", "--splits", "all"]
    )
    assert code == 65
    assert "no nontrivial factorization" in err


def test_toric_bad_split_rejected(capsys):
    code, _, err = run(
        capsys, ["toric", HEXAGON_FILE, "--dilation", "2", "--split", "1", "2"]
    )
    assert code == 65


def test_toric_unit_square_level2(capsys):
    code, data, _ = run_json(
        capsys,
        ["toric", SQUARE_FILE, "--dilation", "2", "--split", "1", "1",
         "--level", "2"],
    )
    assert code == 0
    assert data["verdict"] == "DET_PRESENTED"
    assert data["certificate"]["ideal_equal"] is True
    assert data["assumes_quadratic_generation"] is False


# -- presented -------------------------------------------------------------------


def test_presented_plucker_degree_two(capsys):
    code, data, _ = run_json(
        capsys, ["presented", PLUCKER_O2, "--split", "1"]
    )
    assert code == 0
    assert data["verdict"] == "DET_PRESENTED"
    assert data["omega"][0]["entries"][1][4] == "y5 + y11"
    assert data["dim_I2"] == 105


def test_presented_plucker_degree_one_reports_ideal(capsys):
    code, data, _ = run_json(
        capsys, ["presented", PLUCKER_O1, "--level", "2"]
    )
    assert code == 1
    assert "no nontrivial factorization supplied" in data["notes"]
    assert data["certificate"]["ideal_generators"] == 1
    assert data["certificate"]["ideal_generator_strings"] == [
        "y2*y3 - y1*y4 + y0*y5"
    ]


def test_presented_veronese_plane_level2(tmp_path, capsys):
    ring_file = tmp_path / "p2.json"
    ring_file.write_text(
        json.dumps(
            {
                "variables": ["a", "b", "c"],
                "grading": [[1, 1, 1]],
                "relations": [],
                "bundle_degree": [2],
            }
        )
    )
    code, data, _ = run_json(
        capsys, ["presented", str(ring_file), "--split", "1", "--level", "2"]
    )
    assert code == 0
    assert data["verdict"] == "DET_PRESENTED"
    assert data["certificate"]["ideal_equal"] is True


def test_presented_missing_degree(capsys, tmp_path):
    ring_file = tmp_path / "r.json"
    ring_file.write_text(json.dumps({"variables": ["a"], "relations": []}))
    code, _, err = run(capsys, ["presented", str(ring_file)])
    assert code == 65


# -- examples and sweep -----------------------------------------------------------


def test_examples_suite_passes(capsys):
    code, out, _ = run(capsys, ["examples"])
    assert code == 0
    assert out.count("PASS") == 4


def test_examples_only_one_case(capsys):
    code, out, _ = run(capsys, ["examples", "--only", "del-pezzo"])
    assert code == 0
    assert out.count("PASS") == 1
    assert "del-pezzo" in out


def test_examples_unknown_case(capsys):
    code, _, err = run(capsys, ["examples", "--only", "nonesuch"])
    assert code == 65


def test_examples_detects_tampering(tmp_path, capsys, monkeypatch):
    """A modified golden file is reported with a named difference."""
    import shutil
    from importlib import resources

    golden_dir = resources.files("detpres").joinpath("golden")
    work = tmp_path / "golden"
    shutil.copytree(str(golden_dir), work)
    tampered = json.loads((work / "del-pezzo.json").read_text())
    tampered["report"]["dim_I2"] = 130
    (work / "del-pezzo.json").write_text(json.dumps(tampered, indent=2, sort_keys=True) + "\n")

    real_files = resources.files

    class FakeTraversable:
        def __init__(self, base):
            self.base = base

        def joinpath(self, rel):
            if rel.startswith("golden/"):
                return work / rel.split("/", 1)[1]
            return real_files("detpres").joinpath(rel)

    monkeypatch.setattr("detpres.cli.resources", type(
        "R", (), {"files": staticmethod(lambda pkg: FakeTraversable(pkg))}
    ))
    code, out, _ = run(capsys, ["examples", "--only", "del-pezzo"])
    assert code == 1
    assert "FAIL" in out
    assert "dim_I2" in out


def test_small_sweep(capsys):
    code, data, _ = run_json(
        capsys,
        ["sweep", "--max-factors", "2", "--max-dim", "1", "--max-degree", "2"],
    )
    assert code == 0
    assert data["counterexamples"] == 0
    rows = {(tuple(r["dims"]), tuple(r["m"])): r for r in data["rows"]}
    assert rows[((1,), (2,))]["verdict"] == "DET_PRESENTED"
    assert rows[((1, 1), (1, 1))]["verdict"] == "DET_PRESENTED"


def test_sweep_csv_output(capsys):
    code, out, _ = run(
        capsys,
        ["sweep", "--max-factors", "1", "--max-dim", "1", "--max-degree", "2"],
    )
    assert code == 0
    assert out.splitlines()[0].startswith("dims,m,hypothesis")
    assert "counterexamples: 0" in out


# -- output invariants ---------------------------------------------------------------


def test_reruns_are_bit_identical(capsys):
    outputs = []
    for _ in range(2):
        _, out, _ = run_json(
            capsys,
            ["segre", "--dims", "1,1", "--multidegree", "2,1", "--splits", "all",
             "--pool"],
        )
        outputs.append(out)
    assert outputs[0] == outputs[1]


def test_text_and_json_numbers_agree(capsys):
    args = ["segre", "--dims", "1,1,1", "--multidegree", "2,1,1",
            "--split", "1,1,0", "--section-order", "lex"]
    _, data, _ = run_json(capsys, args)
    _, text, _ = run(capsys, args)
    for key in ("minor_count", "dim_I2", "minor_span_dim"):
        assert f"{key}: {data[key]}" in text


def test_out_flag_writes_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run(
        capsys,
        ["segre", "--dims", "1", "--multidegree", "2", "--split", "1",
         "--format", "json", "--out", str(path)],
    )
    assert code == 0
    assert out == ""
    assert json.loads(path.read_text())["verdict"] == "DET_PRESENTED"


def test_timings_flag_includes_timings(capsys):
    argv = ["segre", "--dims", "1", "--multidegree", "2", "--split", "1"]
    _, without, _ = run_json(capsys, argv)
    assert "timings_ms" not in without
    _, with_timings, _ = run_json(capsys, argv + ["--timings"])
    assert "timings_ms" in with_timings
    assert "total" in with_timings["timings_ms"]
