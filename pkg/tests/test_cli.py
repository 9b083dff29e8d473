import re

import numpy as np
import pytest

from framehs import reference
from framehs.cli import main
from framehs.frames import Frame, frame_bounds
from framehs.matio import load_matrix, load_vector, save_matrix

C30, S30 = np.cos(np.pi / 6), np.sin(np.pi / 6)


@pytest.fixture
def example_files(tmp_path):
    save_matrix(tmp_path / "T.csv", np.diag([3.0, 5.0]))
    r = np.sqrt(3) / 2
    save_matrix(tmp_path / "rotated.csv", np.array([[0.5, r], [r, -0.5]]))
    save_matrix(tmp_path / "three.csv", np.array([[C30, 1.0, 0.0], [S30, 1.0, -1.0]]))
    save_matrix(tmp_path / "I2.csv", np.eye(2))
    return tmp_path


def _strip_timing(text: str) -> str:
    return "\n".join(l for l in text.splitlines() if "wall_time_ms" not in l)


# ----------------------------------------------------------------- bounds

def test_bounds_three_element_frame(example_files, capsys):
    assert main(["bounds", "--frame", str(example_files / "three.csv")]) == 0
    out = capsys.readouterr().out
    a = float(re.search(r"A = (\S+)", out).group(1))
    b = float(re.search(r"B = (\S+)", out).group(1))
    assert a == pytest.approx(0.5453, abs=5e-5)
    assert b == pytest.approx(3.4547, abs=5e-5)
    assert "tight = no" in out


def test_bounds_onb_tight(example_files, capsys):
    assert main(["bounds", "--frame", str(example_files / "I2.csv")]) == 0
    out = capsys.readouterr().out
    assert "A = 1.0" in out and "B = 1.0" in out and "tight = yes" in out


def test_bounds_malformed_csv_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("1,2\nx,4\n")
    assert main(["bounds", "--frame", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "bad.csv:2:1" in err


# ------------------------------------------------------------------- dual

def test_dual_writes_reciprocal_bounds(example_files, capsys):
    out_path = example_files / "dual.csv"
    assert main([
        "dual", "--frame", str(example_files / "three.csv"), "--out", str(out_path),
    ]) == 0
    dual = Frame(load_matrix(out_path))
    b = frame_bounds(dual)
    orig = frame_bounds(Frame(load_matrix(example_files / "three.csv")))
    assert b.lower == pytest.approx(1.0 / orig.upper, rel=1e-9)
    assert b.upper == pytest.approx(1.0 / orig.lower, rel=1e-9)


# ------------------------------------------------------------- approx-mult

def test_approx_mult_diagonal_target(example_files, capsys):
    sym = example_files / "sym.csv"
    approx = example_files / "TA.csv"
    code = main([
        "approx-mult",
        "--target", str(example_files / "T.csv"),
        "--frame", str(example_files / "rotated.csv"),
        "--out-symbol", str(sym),
        "--out-approx", str(approx),
    ])
    assert code == 0
    TA = load_matrix(approx)
    assert np.max(np.abs(TA - [[3.75, 0.4330], [0.4330, 4.25]])) <= 5e-5
    out = capsys.readouterr().out
    assert "residual_fro" in out


def test_approx_mult_identity_symbol(example_files):
    sym = example_files / "sym.csv"
    approx = example_files / "TA.csv"
    assert main([
        "approx-mult",
        "--target", str(example_files / "I2.csv"),
        "--frame", str(example_files / "three.csv"),
        "--out-symbol", str(sym),
        "--out-approx", str(approx),
    ]) == 0
    sigma = load_vector(sym)
    assert np.max(np.abs(sigma - [3.1547, -1.3660, 1.5774])) <= 5e-5
    assert np.max(np.abs(load_matrix(approx) - np.eye(2))) <= 1e-9


def test_approx_mult_tight_frame_constant_symbol(tmp_path):
    doubled = np.hstack([np.eye(2), np.eye(2)])  # tight, bound 2
    save_matrix(tmp_path / "doubled.csv", doubled)
    save_matrix(tmp_path / "I2.csv", np.eye(2))
    sym = tmp_path / "sym.csv"
    assert main([
        "approx-mult",
        "--target", str(tmp_path / "I2.csv"),
        "--frame", str(tmp_path / "doubled.csv"),
        "--out-symbol", str(sym),
        "--out-approx", str(tmp_path / "TA.csv"),
    ]) == 0
    assert np.allclose(load_vector(sym), 0.5, atol=1e-12)


def test_approx_mult_count_mismatch_exits_2(example_files, capsys):
    # analysis frame has 3 elements, synthesis frame only 2
    assert main([
        "approx-mult",
        "--target", str(example_files / "T.csv"),
        "--frame", str(example_files / "three.csv"),
        "--frame2", str(example_files / "rotated.csv"),
        "--out-symbol", str(example_files / "s.csv"),
        "--out-approx", str(example_files / "a.csv"),
    ]) == 2
    assert "error" in capsys.readouterr().err


def test_pinv_tol_env_override(example_files, monkeypatch):
    # an absurd truncation threshold zeroes the Gram pseudoinverse entirely
    monkeypatch.setenv("FRAMEHS_PINV_TOL", "10.0")
    sym = example_files / "sym.csv"
    assert main([
        "approx-mult",
        "--target", str(example_files / "I2.csv"),
        "--frame", str(example_files / "three.csv"),
        "--out-symbol", str(sym),
        "--out-approx", str(example_files / "TA.csv"),
    ]) == 0
    assert np.allclose(load_vector(sym), 0.0)


# --------------------------------------------------------------- hs-inner

def test_hs_inner_all_methods(example_files, capsys):
    assert main([
        "hs-inner",
        "--target", str(example_files / "T.csv"),
        "--frame", str(example_files / "rotated.csv"),
        "--method", "all",
    ]) == 0
    out = capsys.readouterr().out
    assert "method vec-pair: ops = 52 (formula 52)" in out
    assert "method direct: ops = 36 (formula 36)" in out
    assert "method all-pairs: ops = 24 (formula 24)" in out
    assert "method kron: ops = 44 (formula 44)" in out
    assert "all-pairs is cheaper" in out


def test_hs_inner_single_method(example_files, capsys):
    assert main([
        "hs-inner",
        "--target", str(example_files / "T.csv"),
        "--frame", str(example_files / "rotated.csv"),
        "--method", "2",
    ]) == 0
    out = capsys.readouterr().out
    assert "method direct" in out and "4.5" in out


# -------------------------------------------------------------------- gabor

def test_gabor_export_round_trip(tmp_path, capsys):
    export = tmp_path / "frame.csv"
    assert main(["gabor", "--n", "32", "--a", "4", "--b", "4",
                 "--export", str(export)]) == 0
    from framehs.gabor import gabor_frame, gauss_window

    direct = frame_bounds(gabor_frame(gauss_window(32), 4, 4).frame)
    reloaded = frame_bounds(Frame(load_matrix(export)))
    assert abs(direct.lower - reloaded.lower) <= 1e-12
    assert abs(direct.upper - reloaded.upper) <= 1e-12


def test_gabor_rejects_bad_lattice(capsys):
    assert main(["gabor", "--n", "32", "--a", "5", "--b", "4"]) == 2
    assert "divide" in capsys.readouterr().err


def test_gabor_experiment_writes_outputs(tmp_path, capsys):
    heatmap = tmp_path / "fit.pgm"
    assert main(["gabor-experiment", "--n", "32", "--a", "16", "--b", "16",
                 "--out-heatmap", str(heatmap)]) == 0
    assert heatmap.exists()
    header = heatmap.read_bytes()[:15]
    assert header.startswith(b"P5\n32 32\n255\n")
    assert (tmp_path / "fit.csv").exists()
    assert (tmp_path / "fit.png").exists()
    M = load_matrix(tmp_path / "fit.csv")
    assert M.shape == (32, 32)


# ----------------------------------------------------------- reproduce-paper

def test_reproduce_paper_passes_and_is_deterministic(capsys):
    assert main(["reproduce-paper"]) == 0
    first = _strip_timing(capsys.readouterr().out)
    assert main(["reproduce-paper"]) == 0
    second = _strip_timing(capsys.readouterr().out)
    assert first == second
    assert "[PASS]" in first and "[FAIL]" not in first


def test_reproduce_paper_tampered_expectation_fails(monkeypatch, capsys):
    tampered = np.array([3.2, -1.3660, 1.5774])
    monkeypatch.setattr(reference, "EXAMPLE2_UPPER_SYMBOL", tampered)
    assert main(["reproduce-paper"]) == 4
    out = capsys.readouterr().out
    assert "[FAIL]" in out


def test_reproduce_paper_out_dir_writes_figures(tmp_path, capsys):
    out_dir = tmp_path / "report"
    assert main(["reproduce-paper", "--out-dir", str(out_dir)]) == 0
    assert (out_dir / "identity_fit_panels.png").exists()
    assert (out_dir / "identity_fit_n32_a2_b2.csv").exists()
    assert (out_dir / "identity_fit_n32_a16_b16.pgm").exists()


def test_json_report_has_fixed_key_order(example_files, capsys):
    assert main(["--json", "bounds", "--frame", str(example_files / "I2.csv")]) == 0
    out = capsys.readouterr().out
    assert out.index('"command"') < out.index('"inputs"') < out.index('"metrics"')


def test_numerical_failure_exits_3(example_files, monkeypatch, capsys):
    def boom(*args, **kwargs):
        raise np.linalg.LinAlgError("SVD did not converge")

    monkeypatch.setattr(np.linalg, "svd", boom)
    assert main(["bounds", "--frame", str(example_files / "three.csv")]) == 3
    assert "numerical error" in capsys.readouterr().err
