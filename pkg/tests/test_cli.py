import json
import pathlib
import shutil

import pytest

from qspectra import cli
from qspectra.algebra import data_dir, qh_ig2
from qspectra.cli import REGISTRY, RunReport, VarietyDescriptor, main
from qspectra.lefschetz import builtin_collection, save_collection


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# --- report -------------------------------------------------------------

def test_report_projective_space(capsys):
    code, out, err = run(capsys, "report", "P3")
    assert code == 0
    assert "# quantum spectrum: P3" in out
    assert "| algebra dimension | 4 |" in out
    assert "| orbits by length (k) | 1 |" in out
    assert "| zero fiber: length | 0 |" in out
    assert "computed in" in err


def test_report_isotropic_six(capsys):
    code, out, _ = run(capsys, "report", "IG(2,6)")
    assert code == 0
    assert "| orbits by length (k) | 2 |" in out
    assert "| zero fiber: length | 2 |" in out
    assert "| zero fiber: single point | yes |" in out
    assert "| zero fiber: Hilbert function | (1, 1) |" in out
    assert "| zero fiber: socle dimension | 1 |" in out


def test_report_g24(capsys):
    code, out, _ = run(capsys, "report", "G(2,4)")
    assert code == 0
    assert "| invertible fiber: reduced points | 4 |" in out
    assert "| zero fiber: points | 2 |" in out
    assert "| zero fiber: single point | no |" in out


def test_report_jacobi_target(capsys):
    code, out, _ = run(capsys, "report", "A3")
    assert code == 0
    assert "| algebra dimension | 3 |" in out
    assert "| invertible fiber: length | 0 |" in out
    assert "| zero fiber: Hilbert function | (1, 1, 1) |" in out


def test_report_unknown_id(capsys):
    code, _, err = run(capsys, "report", "X17")
    assert code == 1
    assert "unknown variety id" in err
    assert "G(3,6)" in err and "E8" in err


def test_report_json_deterministic(capsys, tmp_path):
    target = tmp_path / "out.json"
    assert main(["report", "G(2,5)", "--json", str(target)]) == 0
    first = target.read_bytes()
    assert main(["report", "G(2,5)", "--json", str(target)]) == 0
    assert target.read_bytes() == first
    capsys.readouterr()
    doc = json.loads(first)
    assert doc["meta"]["tool"] == "qspectra"
    assert doc["spectrum"]["name"] == "G(2,5)"
    assert doc["spectrum"]["dim_zero_part"] == 0
    assert "time" not in first.decode().lower()


def test_report_stdout_deterministic(capsys):
    _, out1, _ = run(capsys, "report", "P5")
    _, out2, _ = run(capsys, "report", "P5")
    assert out1 == out2


def test_internal_violation_maps_to_exit_two(capsys, monkeypatch):
    def broken():
        raise AssertionError("boom")
    monkeypatch.setitem(REGISTRY, "BAD",
                        VarietyDescriptor("BAD", "broken", broken, 1, None))
    code, _, err = run(capsys, "report", "BAD")
    assert code == 2
    assert "internal invariant violation: boom" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 1


# --- check --------------------------------------------------------------

@pytest.fixture()
def minimal_file(tmp_path):
    path = tmp_path / "minimal.json"
    save_collection(builtin_collection("minimal_g24"), path)
    return str(path)


def test_check_minimal_with_bwb(capsys, minimal_file):
    code, out, _ = run(capsys, "check", minimal_file, "--bwb")
    assert code == 0
    assert "[ok] total_vs_dim" in out
    assert "[ok] residual_vs_zero_fiber" in out
    assert "grassmannian backend" in out
    assert "all pairs pass" in out


def test_check_kapranov_shape_reported_not_failed(capsys, tmp_path):
    path = tmp_path / "kapranov.json"
    save_collection(builtin_collection("kapranov_g24"), path)
    code, out, _ = run(capsys, "check", str(path))
    assert code == 0
    assert "rectangular 0, residual 6" in out
    assert "[differs] residual_vs_zero_fiber" in out


def test_check_isotropic_with_bwb(capsys, tmp_path):
    path = tmp_path / "kuz.json"
    save_collection(builtin_collection("kuznetsov_ig2", 3), path)
    code, out, _ = run(capsys, "check", str(path), "--bwb")
    assert code == 0
    assert "hyperplane backend" in out
    assert "all pairs pass" in out


def test_check_increasing_support_rejected(capsys, tmp_path):
    path = tmp_path / "bad_sigma.json"
    path.write_text(json.dumps({
        "variety": "G(2,4)", "fano_index": 4,
        "starting_block": ["O", "U*"], "support": [1, 2]}))
    code, _, err = run(capsys, "check", str(path))
    assert code == 1
    assert "support partition not non-increasing" in err


def test_check_unknown_variety(capsys, tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({
        "variety": "Y", "fano_index": 2,
        "starting_block": ["O"], "support": [1, 1]}))
    code, _, err = run(capsys, "check", str(path))
    assert code == 1
    assert "unknown variety" in err


def test_check_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "check", str(tmp_path / "absent.json"))
    assert code == 1
    assert "cannot read collection" in err


def test_check_bwb_without_backend_warns(capsys, tmp_path):
    path = tmp_path / "a3.json"
    path.write_text(json.dumps({
        "variety": "A3", "fano_index": 1,
        "starting_block": ["O"], "support": [1]}))
    code, out, err = run(capsys, "check", str(path), "--bwb")
    assert code == 0
    assert "no cohomology backend" in err
    assert "numerology vs spectrum of A3" in out


def test_check_bwb_failure_gates_exit(capsys, tmp_path):
    path = tmp_path / "repeat.json"
    path.write_text(json.dumps({
        "variety": "G(2,4)", "fano_index": 4,
        "starting_block": ["O", "O"], "support": [2]}))
    code, out, _ = run(capsys, "check", str(path), "--bwb")
    assert code == 1
    assert "[fail]" in out


# --- selftest -----------------------------------------------------------

def test_selftest_filter_runs_subset(capsys):
    code, out, _ = run(capsys, "selftest", "--filter", "exactlin")
    assert code == 0
    assert "[pass] exactlin: Cayley-Hamilton" in out
    assert "selftest: 1 passed, 0 failed" in out


def test_selftest_unknown_filter(capsys):
    code, _, err = run(capsys, "selftest", "--filter", "nosuchmodule")
    assert code == 1
    assert "no selftest entries match" in err


def test_selftest_catches_perturbed_data(capsys, tmp_path, monkeypatch):
    # corrupt one shipped structure-constant file; every algebra check
    # that touches it must surface the damage
    override = tmp_path / "data"
    override.mkdir()
    source = pathlib.Path(data_dir())
    doc = json.loads((source / "ig2_4.json").read_text())
    assert doc["triples"][1][:3] == [0, 1, 1]
    doc["triples"][1][3] += 1
    (override / "ig2_4.json").write_text(json.dumps(doc))
    for name in ("ig2_6.json", "ig2_8.json", "ig2_10.json"):
        shutil.copy(source / name, override / name)
    monkeypatch.setenv("QSPECTRA_DATA", str(override))
    qh_ig2.cache_clear()
    try:
        code, out, _ = run(capsys, "selftest", "--filter", "algebra")
        assert code == 2
        assert "[fail] algebra: every registry provider validates" in out
    finally:
        qh_ig2.cache_clear()


def test_run_report_wrapper_shape():
    run_report = RunReport()
    assert run_report.to_dict() == {
        "meta": {"tool": "qspectra", "version": cli.__version__}}
