import json
import subprocess
import sys

import pytest

from mdisc.cli import (
    EXIT_INPUT,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_SIZE,
    ConfigDimensionError,
    DuplicatePointError,
    MalformedInputError,
    main,
    parse_data,
)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_degree_text(capsys, data_dir):
    code, out, _ = run(capsys, "degree", data_dir / "hyperdet.json")
    assert code == EXIT_OK
    assert "cycle (2,2)" in out and "latticeIndex 1" in out and "planar" in out


def test_degree_both_agree(capsys, data_dir):
    code, out, _ = run(capsys, "degree", "--method", "both", data_dir / "square_quad.json")
    assert code == EXIT_OK
    assert out.strip().endswith("AGREE")
    assert out.count("cycle (12,8)") == 2


def test_degree_json(capsys, data_dir):
    code, out, _ = run(capsys, "degree", "--method", "tropical", "--format", "json", "--seed", "4", data_dir / "square_quad_minus.json")
    res = json.loads(out)
    assert code == EXIT_OK
    assert res["cycle"] == [12, 7] and res["reduced"] == [12, 7]
    assert res["latticeIndex"] == 1 and res["defective"] is False
    assert res["method"] == "tropical" and res["seed"] == 4


def test_degree_n3_uses_tropical(capsys, data_dir):
    code, out, _ = run(capsys, "degree", "--format", "json", data_dir / "pure_power_123.json")
    assert code == EXIT_OK and json.loads(out)["cycle"] == [18, 12, 10]


def test_planar_method_needs_planar_input(capsys, data_dir):
    code, _, err = run(capsys, "degree", "--method", "planar", data_dir / "pure_power_123.json")
    assert code == EXIT_INPUT and "planar" in err


def test_defect(capsys, data_dir):
    code, out, _ = run(capsys, "defect", data_dir / "quadrics.json")
    assert code == EXIT_OK and out.startswith("DEFECTIVE")
    code, out, _ = run(capsys, "defect", data_dir / "hyperdet.json")
    assert out.startswith("NON-DEFECTIVE (planar-exact)")


def test_stratum_compare(capsys, data_dir):
    _, out, _ = run(capsys, "stratum", "compare", data_dir / "triangles_3_2.json", data_dir / "triangles_7_3.json")
    assert out.strip() == "SAME-STRATUM"
    _, out, _ = run(capsys, "stratum", "compare", data_dir / "triangles_3_2.json", data_dir / "triangles_3_m2.json")
    assert out.strip() == "DIFFERENT-STRATUM"


def test_fit_with_holdout(capsys, data_dir):
    samples = [data_dir / f"trinomial_{k}.json" for k in ("234", "235", "245", "345")]
    code, out, _ = run(capsys, "fit", "--block", "1", "--holdout", data_dir / "trinomial_237.json", "--format", "json", *samples)
    assert code == EXIT_OK
    res = json.loads(out)
    assert res["holdout"] == 204 and res["block"] == 1
    assert res["vanishingDimension"] == 64


def test_fit_across_strata_fails(capsys, data_dir):
    code, _, err = run(capsys, "fit", "--block", "1", data_dir / "triangles_3_2.json", data_dir / "triangles_3_m2.json")
    assert code == EXIT_INPUT and "no linear fit - check stratum" in err


def test_fit_block_range(capsys, data_dir):
    code, _, err = run(capsys, "fit", "--block", "3", data_dir / "triangles_3_2.json")
    assert code == EXIT_INPUT and "--block" in err


@pytest.mark.parametrize("name, message", [
    ("duplicate", "duplicate point in block 2"),
    ("mismatch", "n=2 but 3 configurations"),
    ("malformed", "malformed JSON"),
    ("does_not_exist", "no such file"),
])
def test_input_errors(capsys, data_dir, name, message):
    code, _, err = run(capsys, "degree", data_dir / f"{name}.json")
    assert code == EXIT_INPUT
    assert message in err


def test_parse_data_error_types():
    with pytest.raises(DuplicatePointError):
        parse_data({"n": 2, "configs": [[[0, 0], [0, 0]], [[1, 1]]]})
    with pytest.raises(ConfigDimensionError):
        parse_data({"n": 2, "configs": [[[0, 0, 0]], [[1, 1]]]})
    with pytest.raises(MalformedInputError):
        parse_data({"n": 2, "configs": [[[0, 0.5]], [[1, 1]]]})
    with pytest.raises(MalformedInputError):
        parse_data([1, 2])
    cfgs = parse_data({"configs": [[[0, 0]], [[1, 1]]], "labels": ["f", "g"]})
    assert [c.label for c in cfgs] == ["f", "g"]


def test_size_gate_exit_code(capsys, tmp_path):
    dense3 = [[i, j] for i in range(4) for j in range(4 - i)]
    path = tmp_path / "big.json"
    path.write_text(json.dumps({"n": 2, "configs": [dense3, dense3]}))
    code, _, err = run(capsys, "degree", "--method", "tropical", path)
    assert code == EXIT_SIZE and "--force" in err


def test_examples(capsys):
    code, out, _ = run(capsys, "examples", "--list")
    assert code == EXIT_OK and "hyperdet-2x2x2" in out
    code, out, _ = run(capsys, "examples", "--run", "hyperdet-2x2x2")
    assert code == EXIT_OK and out.strip() == "PASS (2,2)"
    code, out, _ = run(capsys, "examples", "--run", "trinomial-2-2-2")
    assert code == EXIT_MISMATCH and out.startswith("FAIL (12,12,12) expected (23,23,23)")
    code, _, err = run(capsys, "examples", "--run", "nope")
    assert code == EXIT_INPUT


def test_module_entry_point(data_dir):
    proc = subprocess.run(
        [sys.executable, "-m", "mdisc", "degree", str(data_dir / "hyperdet.json")],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and "(2,2)" in proc.stdout
