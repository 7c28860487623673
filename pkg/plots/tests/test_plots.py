"""Secondary-component tests: render the figure set from real CLI output.

The quatcurve CLI is driven through subprocess only (its external interface);
nothing from the main package is imported here.
"""

import json
import math
import subprocess
import sys

import numpy as np
import pytest

from quatcurve_plots.cli import main as plots_main
from quatcurve_plots.plotting import CsvFormatError, read_csv

SQRT2 = math.sqrt(2.0)
TWO_PI = 2 * math.pi
INVOLUTE_CS = (7.0, 9.0, 11.0)


def run_cli(*args):
    proc = subprocess.run([sys.executable, "-m", "quatcurve.cli", *args],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    return proc


@pytest.fixture(scope="module")
def csv_bundle(tmp_path_factory):
    """Figure inputs produced by the main CLI: xi, three involutes, alpha,
    and the spatial traces of the involutes (via the samples-spec round trip)."""
    root = tmp_path_factory.mktemp("csv")
    xi = root / "xi.csv"
    run_cli("frenet", "--curve", "paper_example", "--from", "0",
            "--to", str(TWO_PI), "--n", "257", "--out", str(xi))

    involutes = []
    spatial_involutes = []
    for c in INVOLUTE_CS:
        inv = root / f"involute_c{c:g}.csv"
        run_cli("involute", "--curve", "paper_example", "--c", str(c),
                "--from", "0", "--to", str(TWO_PI), "--n", "257",
                "--out", str(inv))
        involutes.append(inv)

        spec = root / f"involute_c{c:g}.json"
        assert plots_main(["to-samples", str(inv), "--out", str(spec)]) == 0
        trace = root / f"beta_c{c:g}.csv"
        run_cli("associate", "--curve", str(spec), "--from", "0.05",
                "--to", str(TWO_PI - 0.05), "--n", "200", "--out", str(trace))
        spatial_involutes.append(trace)

    alpha = root / "alpha.csv"
    run_cli("associate", "--curve", "paper_example", "--anchor",
            f"0,{SQRT2},0", "--from", "0", "--to", str(TWO_PI), "--n", "257",
            "--out", str(alpha))
    return {"xi": xi, "involutes": involutes, "alpha": alpha,
            "spatial_involutes": spatial_involutes}


def rigid_rms(points, reference):
    """Kabsch RMS after the best proper-rigid alignment."""
    P = np.asarray(points)
    Q = np.asarray(reference)
    Pc, Qc = P - P.mean(axis=0), Q - Q.mean(axis=0)
    U, _, Vt = np.linalg.svd(Pc.T @ Qc)
    d = np.sign(np.linalg.det(U @ Vt))
    R = U @ np.diag([1.0, 1.0, d]) @ Vt
    return float(np.sqrt(np.mean(np.sum((Pc @ R - Qc) ** 2, axis=1))))


def test_acceptance_12_figure_set(csv_bundle, tmp_path):
    """Four PNGs from real CLI output, plus the alpha closed-form residual."""
    outputs = {
        "xi": tmp_path / "xi_projection.png",
        "involutes": tmp_path / "involutes_projection.png",
        "alpha": tmp_path / "alpha_spatial.png",
        "beta": tmp_path / "involute_spatial.png",
    }
    assert plots_main(["projection", str(csv_bundle["xi"]),
                       "--drop-axis", "4", "--out", str(outputs["xi"])]) == 0
    assert plots_main(["projection",
                       *map(str, csv_bundle["involutes"]),
                       "--drop-axis", "4",
                       "--out", str(outputs["involutes"])]) == 0
    assert plots_main(["spatial", str(csv_bundle["alpha"]),
                       "--out", str(outputs["alpha"])]) == 0
    assert plots_main(["spatial", *map(str, csv_bundle["spatial_involutes"]),
                       "--out", str(outputs["beta"])]) == 0
    for name, path in outputs.items():
        assert path.exists() and path.stat().st_size > 1000, name

    header, rows = read_csv(str(csv_bundle["alpha"]))
    s = rows[:, header.index("s")]
    got = rows[:, [header.index(k) for k in ("ax", "ay", "az")]]
    closed = np.stack([s / SQRT2, SQRT2 * np.cos(s / 2),
                       SQRT2 * np.sin(s / 2)], axis=1)
    rms = rigid_rms(got, closed)
    ok = rms < 1e-3
    print(f"ACCEPTANCE 12: {'PASS' if ok else 'FAIL'} - four PNGs written; "
          f"alpha overlay RMS {rms:.2e} (tol 1e-3)")
    assert ok


def test_projection_trace_per_c(csv_bundle, tmp_path):
    out = tmp_path / "fig.png"
    assert plots_main(["projection", *map(str, csv_bundle["involutes"]),
                       "--out", str(out)]) == 0
    assert out.exists()


def test_empty_csv_gives_empty_axes(tmp_path):
    empty = tmp_path / "empty.csv"
    empty.write_text("s,x1,x2,x3,x4\n")
    out = tmp_path / "empty.png"
    assert plots_main(["projection", str(empty), "--out", str(out)]) == 0
    assert out.exists() and out.stat().st_size > 0


def test_single_point_spatial_marker(tmp_path):
    single = tmp_path / "single.csv"
    single.write_text("s,ax,ay,az\n0.0,1.0,2.0,3.0\n")
    out = tmp_path / "single.png"
    assert plots_main(["spatial", str(single), "--out", str(out)]) == 0
    assert out.exists()


def test_missing_csv_fails(tmp_path, capsys):
    out = tmp_path / "x.png"
    assert plots_main(["projection", str(tmp_path / "nope.csv"),
                       "--out", str(out)]) == 2
    assert "error:" in capsys.readouterr().err
    assert not out.exists()


def test_malformed_csv_fails(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("s,x1,x2,x3,x4\n1,2,three,4,5\n")
    assert plots_main(["projection", str(bad),
                       "--out", str(tmp_path / "x.png")]) == 2


def test_wrong_columns_fail(tmp_path):
    wrong = tmp_path / "wrong.csv"
    wrong.write_text("a,b\n1,2\n")
    assert plots_main(["spatial", str(wrong),
                       "--out", str(tmp_path / "x.png")]) == 2


def test_reproducible_output(csv_bundle, tmp_path):
    a, b = tmp_path / "a.png", tmp_path / "b.png"
    for out in (a, b):
        assert plots_main(["projection", str(csv_bundle["xi"]),
                           "--drop-axis", "4", "--out", str(out)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_drop_axis_choices(csv_bundle, tmp_path):
    # The example's x3 and x4 coincide, so dropping either gives the same
    # geometry; both must at least render.
    for axis in (3, 4):
        out = tmp_path / f"drop{axis}.png"
        assert plots_main(["projection", str(csv_bundle["xi"]),
                           "--drop-axis", str(axis), "--out", str(out)]) == 0


def test_to_samples_spec_roundtrip(csv_bundle, tmp_path):
    spec_path = tmp_path / "spec.json"
    assert plots_main(["to-samples", str(csv_bundle["involutes"][0]),
                       "--out", str(spec_path)]) == 0
    spec = json.loads(spec_path.read_text())
    assert spec["type"] == "samples"
    assert len(spec["s"]) == len(spec["points"]) == 257
