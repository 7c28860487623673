"""Serret-Frenet apparatus {T, N, B, E, kappa, k, bitorsion} for curves in R^4.

Construction, valid for any regular (not necessarily unit-speed) curve:

* T    = xi' / |xi'|
* N    = normalized (|xi'|^2 xi'' - <xi', xi''> xi')
* E    = eta * cross4(T, N, xi''') / |...|,  eta = +-1
* B    = the unit vector completing span(T, N, xi'''): the ternary wedge of
  (E, T, N) signed so that <B, xi'''> > 0 (the Gram-Schmidt direction).
  With that sign, k >= 0 satisfies N' = -kappa T + k B.
* kappa    = |...N numerator...| / |xi'|^4            (first curvature, >= 0)
* k        = |wedge| |xi'| / |...N numerator...|      (second curvature, >= 0)
* bitorsion = <xi'''', E> / (|wedge| |xi'|)           (third curvature, signed)

eta is fixed by det(T, N, B, E) = +1 and recorded on the frame.  All
quantities are parametrization covariant.  Functions here are pure; grid
sampling applies a sequential sign-continuity post-pass.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field, replace

import numpy as np

from .curves import CurveDefinition
from .errors import CurveSingular, FrameUndefined
from .quaternions import cross4

#: Relative scale factor under which a normalizing denominator counts as zero.
DEGENERACY_RTOL = 1e-12


@dataclass(frozen=True)
class FrenetFrame4:
    """Frame and curvatures of a curve at one parameter value.

    T, N, B, E are unit 4-vectors, pairwise orthogonal, det(T,N,B,E) = +1.
    kappa and k are nonnegative; bitorsion is signed.  eta records the
    orientation sign applied to E.
    """

    s: float
    T: np.ndarray
    N: np.ndarray
    B: np.ndarray
    E: np.ndarray
    kappa: float
    k: float
    bitorsion: float
    eta: int

    def vectors(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        return self.T, self.N, self.B, self.E


def _normal_numerator(d1: np.ndarray, d2: np.ndarray) -> np.ndarray:
    speed2 = float(np.dot(d1, d1))
    return speed2 * d2 - float(np.dot(d1, d2)) * d1


def tangent_normal(curve: CurveDefinition, s: float) -> tuple[np.ndarray, np.ndarray]:
    """Just T and N; usable where the higher frame vectors are degenerate."""
    d1 = curve.eval(s, 1)
    d2 = curve.eval(s, 2)
    speed = float(np.linalg.norm(d1))
    scale = max(1.0, float(np.linalg.norm(d2)))
    if speed <= DEGENERACY_RTOL * scale:
        raise CurveSingular(f"vanishing speed at s={s}")
    nraw = _normal_numerator(d1, d2)
    nnorm = float(np.linalg.norm(nraw))
    if nnorm <= DEGENERACY_RTOL * speed**2 * max(float(np.linalg.norm(d2)), speed):
        raise FrameUndefined("N", f"vanishing normal numerator at s={s}")
    return d1 / speed, nraw / nnorm


def frenet_apparatus(curve: CurveDefinition, s: float) -> FrenetFrame4:
    """Full frame and curvatures at s.

    Raises CurveSingular for vanishing speed, FrameUndefined("N") where the
    first curvature vanishes, FrameUndefined("E") where xi''' falls into
    span(T, N) (vanishing second curvature).
    """
    d1 = curve.eval(s, 1)
    d2 = curve.eval(s, 2)
    d3 = curve.eval(s, 3)
    d4 = curve.eval(s, 4)

    speed = float(np.linalg.norm(d1))
    scale = max(1.0, float(np.linalg.norm(d2)), float(np.linalg.norm(d3)))
    if speed <= DEGENERACY_RTOL * scale:
        raise CurveSingular(f"vanishing speed at s={s}")
    T = d1 / speed

    nraw = _normal_numerator(d1, d2)
    nnorm = float(np.linalg.norm(nraw))
    if nnorm <= DEGENERACY_RTOL * speed**2 * max(float(np.linalg.norm(d2)), speed):
        raise FrameUndefined("N", f"vanishing normal numerator at s={s}")
    N = nraw / nnorm
    kappa = nnorm / speed**4

    wedge = cross4(T, N, d3)
    wnorm = float(np.linalg.norm(wedge))
    if wnorm <= DEGENERACY_RTOL * max(float(np.linalg.norm(d3)), 1.0):
        raise FrameUndefined("E", f"xi''' lies in span(T, N) at s={s}")
    e_hat = wedge / wnorm
    k = wnorm * speed / nnorm

    b_raw = cross4(e_hat, T, N)
    sigma = 1.0 if float(np.dot(b_raw, d3)) >= 0.0 else -1.0
    B = sigma * b_raw

    # det(T, N, B, e_hat) = +-1 for an orthonormal quadruple; flip E if -1.
    det = float(np.linalg.det(np.array([T, N, B, e_hat])))
    eta = 1 if det > 0 else -1
    E = eta * e_hat

    bitorsion = float(np.dot(d4, E)) / (wnorm * speed)
    return FrenetFrame4(s=float(s), T=T, N=N, B=B, E=E, kappa=kappa, k=k,
                        bitorsion=bitorsion, eta=eta)


def serret_frenet_residual(curve: CurveDefinition, s: float, h: float) -> np.ndarray:
    """Norms of the four Frenet ODE residuals at s, via central differences.

    Residuals: |FD(T) - kappa N|, |FD(N) + kappa T - k B|,
    |FD(B) + k N - bitorsion E|, |FD(E) + bitorsion B|.  Frames at s +- h are
    sign-aligned to the frame at s before differencing.  Each residual is
    O(h^2) for smooth curves.
    """
    f0 = frenet_apparatus(curve, s)
    fp = frenet_apparatus(curve, s + h)
    fm = frenet_apparatus(curve, s - h)

    def aligned(vec_p, vec_m, vec_0):
        if float(np.dot(vec_p, vec_0)) < 0.0:
            vec_p = -vec_p
        if float(np.dot(vec_m, vec_0)) < 0.0:
            vec_m = -vec_m
        return (vec_p - vec_m) / (2.0 * h)

    dT = aligned(fp.T, fm.T, f0.T)
    dN = aligned(fp.N, fm.N, f0.N)
    dB = aligned(fp.B, fm.B, f0.B)
    dE = aligned(fp.E, fm.E, f0.E)
    return np.array([
        float(np.linalg.norm(dT - f0.kappa * f0.N)),
        float(np.linalg.norm(dN + f0.kappa * f0.T - f0.k * f0.B)),
        float(np.linalg.norm(dB + f0.k * f0.N - f0.bitorsion * f0.E)),
        float(np.linalg.norm(dE + f0.bitorsion * f0.B)),
    ])


@dataclass
class ApparatusSeries:
    """Frames and positions sampled over a parameter grid.

    ``frames[i]`` is None where the frame raised; the reason is recorded in
    ``skipped``.  Positions are always present.  ``extras`` holds additional
    per-point export columns (involute exports add c, lambda, distance).
    """

    curve_id: str
    grid: np.ndarray
    positions: np.ndarray
    frames: list[FrenetFrame4 | None]
    skipped: list[tuple[float, str]] = field(default_factory=list)
    extras: dict[str, np.ndarray] = field(default_factory=dict)

    CSV_COLUMNS = (
        ["s", "x1", "x2", "x3", "x4"]
        + [f"{v}{i}" for v in "TNBE" for i in range(1, 5)]
        + ["kappa", "k", "bitorsion", "eta"]
    )

    def write_csv(self, fh: io.TextIOBase) -> None:
        """Write the series; floats use repr (IEEE-754 round-trip) formatting."""
        columns = list(self.CSV_COLUMNS) + list(self.extras)
        fh.write(",".join(columns) + "\n")
        nan = float("nan")
        for i, s in enumerate(self.grid):
            frame = self.frames[i]
            row = [s, *self.positions[i]]
            if frame is None:
                row += [nan] * 16 + [nan, nan, nan, nan]
            else:
                row += [*frame.T, *frame.N, *frame.B, *frame.E,
                        frame.kappa, frame.k, frame.bitorsion, float(frame.eta)]
            row += [self.extras[name][i] for name in self.extras]
            fh.write(",".join(repr(float(v)) for v in row) + "\n")

    def to_csv_text(self) -> str:
        buf = io.StringIO()
        self.write_csv(buf)
        return buf.getvalue()


def _continuity_pass(frames: list[FrenetFrame4 | None]) -> list[FrenetFrame4 | None]:
    """Flip frame-vector signs so consecutive frames stay aligned.

    The pointwise construction is already continuous away from degeneracies,
    so this is normally a no-op; it guards exports against isolated sign
    flips.  A flipped E negates bitorsion; any flip toggles the recorded
    orientation sign.
    """
    out: list[FrenetFrame4 | None] = []
    prev: FrenetFrame4 | None = None
    for frame in frames:
        if frame is None:
            out.append(None)
            continue
        if prev is not None:
            changes = {}
            flips = 0
            for name in ("N", "B", "E"):
                cur = getattr(frame, name)
                if float(np.dot(cur, getattr(prev, name))) < 0.0:
                    changes[name] = -cur
                    flips += 1
            if changes:
                if "E" in changes:
                    changes["bitorsion"] = -frame.bitorsion
                if flips % 2 == 1:
                    changes["eta"] = -frame.eta
                frame = replace(frame, **changes)
        out.append(frame)
        prev = frame
    return out


def sample_apparatus(curve: CurveDefinition, grid,
                     curve_id: str = "curve") -> ApparatusSeries:
    """Frames at each grid point, with sign continuity along the series.

    Points where the frame is undefined are skipped (position kept, frame
    None) and recorded with the reason.
    """
    grid = np.asarray(grid, dtype=float)
    positions = np.array([curve.eval(s, 0) for s in grid])
    frames: list[FrenetFrame4 | None] = []
    skipped: list[tuple[float, str]] = []
    for s in grid:
        try:
            frames.append(frenet_apparatus(curve, s))
        except (CurveSingular, FrameUndefined) as exc:
            frames.append(None)
            skipped.append((float(s), str(exc)))
    frames = _continuity_pass(frames)
    return ApparatusSeries(curve_id=curve_id, grid=grid, positions=positions,
                           frames=frames, skipped=skipped)
