"""Render quatcurve CSV exports as 3D figures.

Consumes the CSV formats written by the `quatcurve` CLI:

* frame/involute series -- columns s, x1..x4 (plus frame columns, and c /
  lambda / distance for involutes),
* spatial curves -- columns s, ax, ay, az.

``plot_projection`` draws the three retained coordinates of 4-space curves
after dropping one axis; ``plot_spatial`` draws spatial curves directly.
Output is deterministic: fixed style, fixed canvas, pinned PNG metadata.
"""

from __future__ import annotations

import json
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)
import numpy as np  # noqa: E402

_COLORS = ("tab:blue", "tab:orange", "tab:green", "tab:red", "tab:purple",
           "tab:brown")
_PNG_METADATA = {"Software": "quatcurve-plots"}


class CsvFormatError(ValueError):
    """The input CSV is missing or lacks the expected columns."""


def read_csv(path: str) -> tuple[list[str], np.ndarray]:
    """Header list plus a (rows, columns) float array (empty for header-only)."""
    if not os.path.exists(path):
        raise CsvFormatError(f"no such CSV: {path}")
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line for line in fh.read().split("\n") if line.strip()]
    if not lines:
        raise CsvFormatError(f"{path}: empty file, expected a header line")
    header = lines[0].split(",")
    try:
        rows = np.array([[float(v) for v in line.split(",")]
                         for line in lines[1:]], dtype=float)
    except ValueError as exc:
        raise CsvFormatError(f"{path}: non-numeric data row ({exc})") from exc
    if rows.size and rows.shape[1] != len(header):
        raise CsvFormatError(f"{path}: ragged rows")
    return header, rows


def _columns(header: list[str], rows: np.ndarray, names: list[str],
             path: str) -> np.ndarray:
    missing = [n for n in names if n not in header]
    if missing:
        raise CsvFormatError(f"{path}: missing columns {missing}")
    if rows.size == 0:
        return np.empty((0, len(names)))
    return rows[:, [header.index(n) for n in names]]


def _trace_label(path: str, header: list[str], rows: np.ndarray) -> str:
    if "c" in header and rows.size:
        return f"c = {rows[0, header.index('c')]:g}"
    return os.path.splitext(os.path.basename(path))[0]


def _new_axes():
    fig = plt.figure(figsize=(6.0, 5.0), dpi=120)
    ax = fig.add_subplot(projection="3d")
    return fig, ax


def _draw(ax, pts: np.ndarray, label: str, color: str) -> None:
    if len(pts) == 1:
        ax.scatter(*pts[0], label=label, color=color, marker="o")
    elif len(pts) > 1:
        ax.plot(pts[:, 0], pts[:, 1], pts[:, 2], label=label, color=color,
                linewidth=1.2)


def _finish(fig, ax, out_path: str, axis_labels: tuple[str, str, str]) -> None:
    ax.set_xlabel(axis_labels[0])
    ax.set_ylabel(axis_labels[1])
    ax.set_zlabel(axis_labels[2])
    if ax.get_legend_handles_labels()[0]:
        ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    fig.savefig(out_path, metadata=_PNG_METADATA)
    plt.close(fig)


def plot_projection(csv_paths: list[str], drop_axis: int, out_path: str) -> None:
    """3D line plot of the coordinates that survive dropping one of x1..x4.

    One trace per input CSV; involute exports are labelled by their c value.
    Header-only inputs produce empty axes.
    """
    if drop_axis not in (1, 2, 3, 4):
        raise CsvFormatError(f"drop_axis must be 1..4, got {drop_axis}")
    keep = [f"x{i}" for i in range(1, 5) if i != drop_axis]
    fig, ax = _new_axes()
    for i, path in enumerate(csv_paths):
        header, rows = read_csv(path)
        pts = _columns(header, rows, keep, path)
        _draw(ax, pts, _trace_label(path, header, rows),
              _COLORS[i % len(_COLORS)])
    _finish(fig, ax, out_path, tuple(keep))


def plot_spatial(csv_paths: list[str], out_path: str) -> None:
    """3D line plot of spatial-curve CSVs (columns ax, ay, az)."""
    fig, ax = _new_axes()
    for i, path in enumerate(csv_paths):
        header, rows = read_csv(path)
        pts = _columns(header, rows, ["ax", "ay", "az"], path)
        _draw(ax, pts, _trace_label(path, header, rows),
              _COLORS[i % len(_COLORS)])
    _finish(fig, ax, out_path, ("x", "y", "z"))


def involute_csv_to_samples_spec(csv_path: str, spec_path: str) -> None:
    """Re-export an involute CSV as a sampled-curve spec JSON.

    Lets the spatial curves associated with involutes be produced through the
    main CLI's own interfaces: involute CSV -> samples spec -> associate.
    """
    header, rows = read_csv(csv_path)
    if rows.size == 0:
        raise CsvFormatError(f"{csv_path}: no data rows to convert")
    s = rows[:, header.index("s")]
    pts = _columns(header, rows, ["x1", "x2", "x3", "x4"], csv_path)
    spec = {"type": "samples", "s": s.tolist(), "points": pts.tolist()}
    with open(spec_path, "w", encoding="utf-8") as fh:
        json.dump(spec, fh)
