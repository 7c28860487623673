"""CLI contract: flags, CSV shapes, exit codes, determinism, atomic writes."""

import json
import math
import os

import numpy as np
import pytest

from quatcurve.cli import main

SQRT2 = math.sqrt(2.0)


def read_csv(path):
    with open(path) as fh:
        lines = fh.read().strip().split("\n")
    header = lines[0].split(",")
    rows = np.array([[float(v) for v in line.split(",")] for line in lines[1:]])
    return header, rows


class TestFrenetCommand:
    def test_hundred_rows_constant_kappa(self, tmp_path, capsys):
        out = tmp_path / "pe.csv"
        code = main(["frenet", "--curve", "paper_example", "--from", "0",
                     "--to", "6.283", "--n", "100", "--out", str(out)])
        assert code == 0
        header, rows = read_csv(out)
        assert len(rows) == 100
        kappa_col = header.index("kappa")
        np.testing.assert_allclose(rows[:, kappa_col], SQRT2 / 4, atol=1e-9)

    def test_single_row(self, tmp_path):
        out = tmp_path / "one.csv"
        assert main(["frenet", "--curve", "paper_example", "--n", "1",
                     "--out", str(out)]) == 0
        _, rows = read_csv(out)
        assert rows.shape[0] == 1

    def test_stdout_default(self, capsys):
        assert main(["frenet", "--curve", "paper_example", "--n", "3"]) == 0
        captured = capsys.readouterr()
        assert captured.out.startswith("s,x1,x2,x3,x4,T1")

    def test_curve_spec_file(self, tmp_path):
        spec = tmp_path / "dh.json"
        spec.write_text(json.dumps({"type": "double_helix", "a": 0.8,
                                    "p": 1.0, "b": 0.3, "q": -2.0}))
        out = tmp_path / "dh.csv"
        assert main(["frenet", "--curve", str(spec), "--n", "5",
                     "--out", str(out)]) == 0
        _, rows = read_csv(out)
        assert rows.shape[0] == 5

    def test_inline_json(self, tmp_path):
        out = tmp_path / "c4.csv"
        spec = json.dumps({"type": "circular4", "A": 0.6, "omega": 1.0,
                           "B": 0.5, "C": math.sqrt(0.39)})
        assert main(["frenet", "--curve", spec, "--n", "4",
                     "--out", str(out)]) == 0

    def test_bad_spec_exit_2(self, tmp_path, capsys):
        assert main(["frenet", "--curve", "no_such_curve"]) == 2
        assert "error:" in capsys.readouterr().err
        spec = json.dumps({"type": "circular4", "A": 1})
        assert main(["frenet", "--curve", spec]) == 2

    def test_no_partial_file_on_error(self, tmp_path):
        out = tmp_path / "never.csv"
        assert main(["frenet", "--curve", "bogus", "--out", str(out)]) == 2
        assert not out.exists()

    def test_deterministic_bytes(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["frenet", "--curve", "paper_example", "--n", "64"]
        assert main(args + ["--out", str(a)]) == 0
        assert main(args + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()


class TestInvoluteCommand:
    def test_positions_match_closed_form(self, tmp_path):
        out = tmp_path / "inv.csv"
        code = main(["involute", "--curve", "paper_example", "--c", "4",
                     "--from", "0", "--to", str(2 * math.pi), "--n", "200",
                     "--exclusion-tol", "1e-3", "--out", str(out)])
        assert code == 0
        header, rows = read_csv(out)
        s = rows[:, header.index("s")]
        assert not np.any(np.abs(s - 4.0) < 1e-3)
        x = rows[:, 1:5]
        cc, ss = np.cos(s / 2), np.sin(s / 2)
        want = 0.5 * np.stack([
            (2 - 4 + s) * cc + (-2 - 4 + s) * ss,
            (2 + 4 - s) * cc + (2 - 4 + s) * ss,
            np.full_like(s, 4.0), np.full_like(s, 4.0)], axis=1)
        np.testing.assert_allclose(x, want, atol=1e-9)

    def test_distance_and_lambda_columns(self, tmp_path):
        out = tmp_path / "inv.csv"
        assert main(["involute", "--curve", "paper_example", "--c", "4",
                     "--n", "100", "--out", str(out)]) == 0
        header, rows = read_csv(out)
        s = rows[:, header.index("s")]
        np.testing.assert_allclose(rows[:, header.index("lambda")], 4.0 - s,
                                   atol=0)
        np.testing.assert_allclose(rows[:, header.index("distance")],
                                   np.abs(4.0 - s), atol=1e-9)
        assert np.all(rows[:, header.index("c")] == 4.0)

    def test_cusp_outside_domain_full_output(self, tmp_path, capsys):
        out = tmp_path / "inv.csv"
        assert main(["involute", "--curve", "paper_example", "--c", "100",
                     "--n", "50", "--out", str(out)]) == 0
        _, rows = read_csv(out)
        assert rows.shape[0] == 50
        assert "excluded" not in capsys.readouterr().err

    def test_band_reported(self, tmp_path, capsys):
        out = tmp_path / "inv.csv"
        assert main(["involute", "--curve", "paper_example", "--c", "4",
                     "--n", "50", "--out", str(out)]) == 0
        assert "excluded singular band" in capsys.readouterr().err


class TestVerifyCommand:
    def test_all_suites_exit_zero(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        assert main(["verify", "--suite", "all", "--out", str(out)]) == 0
        data = json.loads(out.read_text())
        assert data["schema"] == 1
        assert data["overall_pass"] is True
        assert data["resolved_reconstruction_sign"] == 1
        text = capsys.readouterr().out
        assert "overall: PASS" in text

    def test_single_suite_filter(self, capsys):
        assert main(["verify", "--suite", "algebra"]) == 0
        text = capsys.readouterr().out
        assert "algebra." in text
        assert "frenet." not in text

    def test_failure_exit_one(self, capsys):
        assert main(["verify", "--suite", "algebra", "--tol",
                     "algebra.associativity=1e-30"]) == 1

    def test_bad_tol_exit_two(self, capsys):
        assert main(["verify", "--suite", "algebra", "--tol", "oops"]) == 2

    def test_env_tol_override(self, monkeypatch):
        monkeypatch.setenv("QUATCURVE_TOL", "1e-30")
        assert main(["verify", "--suite", "frenet"]) == 1

    def test_corrupted_orientation_exit_one(self, monkeypatch, capsys):
        import quatcurve.frenet as frenet_mod
        true_apparatus = frenet_mod.frenet_apparatus

        def corrupted(curve, s):
            from dataclasses import replace
            frame = true_apparatus(curve, s)
            return replace(frame, E=-frame.E)

        monkeypatch.setattr(frenet_mod, "frenet_apparatus", corrupted)
        assert main(["verify", "--suite", "frenet"]) == 1

    def test_json_deterministic(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        assert main(["verify", "--suite", "algebra", "--out", str(a)]) == 0
        assert main(["verify", "--suite", "algebra", "--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()


class TestAssociateCommand:
    def test_alpha_matches_closed_form(self, tmp_path):
        out = tmp_path / "alpha.csv"
        code = main(["associate", "--curve", "paper_example", "--anchor",
                     f"0,{SQRT2},0", "--from", "0",
                     "--to", str(2 * math.pi), "--n", "257",
                     "--out", str(out)])
        assert code == 0
        header, rows = read_csv(out)
        assert header[:4] == ["s", "ax", "ay", "az"]
        from quatcurve import rigid_align
        s = rows[:, 0]
        closed = np.stack([s / SQRT2, SQRT2 * np.cos(s / 2),
                           SQRT2 * np.sin(s / 2)], axis=1)
        _, rms = rigid_align(rows[:, 1:4], closed)
        assert rms < 1e-4

    def test_zero_length_grid_header_only(self, tmp_path):
        out = tmp_path / "empty.csv"
        assert main(["associate", "--curve", "paper_example", "--n", "0",
                     "--out", str(out)]) == 0
        assert out.read_text() == "s,ax,ay,az\n"

    def test_frames_columns(self, tmp_path):
        out = tmp_path / "frames.csv"
        assert main(["associate", "--curve", "paper_example", "--frames",
                     "--n", "5", "--out", str(out)]) == 0
        header, rows = read_csv(out)
        assert header[-9:] == ["tx", "ty", "tz", "nx", "ny", "nz",
                               "bx", "by", "bz"]
        t = rows[:, 4:7]
        np.testing.assert_allclose(np.linalg.norm(t, axis=1), 1.0, atol=1e-9)

    def test_constant_discrete_curvature_double_helix(self, tmp_path):
        out = tmp_path / "dh.csv"
        spec = json.dumps({"type": "double_helix", "a": 0.8, "p": 1.0,
                           "b": 0.3, "q": -2.0})
        assert main(["associate", "--curve", spec, "--from", "0", "--to",
                     "6.0", "--n", "601", "--out", str(out)]) == 0
        _, rows = read_csv(out)
        from quatcurve import discrete_curvature
        curv = discrete_curvature(rows[:, 1:4])
        assert np.max(curv) - np.min(curv) < 1e-4

    def test_bad_anchor_exit_2(self, capsys):
        assert main(["associate", "--curve", "paper_example",
                     "--anchor", "1,2"]) == 2
