"""Spatial (R^3) frames associated with a 4-space quaternionic frame.

The 4D frame satisfies N = t x T, B = n x T, E = b x T with {t, n, b}
spatial unit quaternions; since T is unit, inversion is t = N x conj(T),
n = B x conj(T), b = E x conj(T).  The associated spatial curve integrates
the vector part of t.  The 3-space curvature pair is (k, r) with k the
4-curve's second curvature and r = bitorsion + kappa.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .curves import CurveDefinition
from .errors import NotSpatial
from .frenet import FrenetFrame4, tangent_normal
from .involute import InvoluteParams, involute_curve
from .quaternions import Quaternion, conjugate_vec4, qmul_vec4

#: Scalar-part threshold above which a recovered vector is rejected.
SPATIAL_SCALAR_TOL = 1e-6


@dataclass(frozen=True)
class SpatialFrame:
    """Spatial quaternion triple {t, n, b} with the R^3 curvatures (k, r)."""

    t: Quaternion
    n: Quaternion
    b: Quaternion
    k: float
    r: float


def _recover(vec4: np.ndarray, tangent: np.ndarray, name: str) -> Quaternion:
    out = qmul_vec4(vec4, conjugate_vec4(tangent))
    if abs(out[3]) > SPATIAL_SCALAR_TOL:
        raise NotSpatial(
            f"recovered {name} has scalar part {out[3]:.3e} (frame not orthonormal?)")
    return Quaternion.from_vec4(out)


def spatial_frame(frame: FrenetFrame4) -> SpatialFrame:
    """Recover {t, n, b} from a 4D frame; copies the curvature pair (k, r)."""
    t = _recover(frame.N, frame.T, "t")
    n = _recover(frame.B, frame.T, "n")
    b = _recover(frame.E, frame.T, "b")
    return SpatialFrame(t=t, n=n, b=b, k=frame.k,
                        r=frame.bitorsion + frame.kappa)


def spatial_tangent(curve: CurveDefinition, s: float) -> np.ndarray:
    """Vector part of the associated spatial tangent t = N x conj(T).

    Needs only T and N, so it works where the higher frame vectors are
    degenerate (involutes of curves with vanishing bitorsion).
    """
    T, N = tangent_normal(curve, s)
    t = qmul_vec4(N, conjugate_vec4(T))
    return t[:3]


def associated_spatial_curve(curve: CurveDefinition, grid, anchor) -> np.ndarray:
    """Integrate the spatial tangent field along the grid from anchor.

    Fourth-order quadrature (Simpson rule per interval, with midpoint frame
    evaluations) of s -> t(s); the result is unit speed in R^3 up to
    integration error.  Returns an (n, 3) array of positions.
    """
    grid = np.asarray(grid, dtype=float)
    anchor = np.asarray(anchor, dtype=float)
    positions = np.empty((len(grid), 3))
    positions[0] = anchor
    for i in range(len(grid) - 1):
        s0, s1 = grid[i], grid[i + 1]
        h = s1 - s0
        t0 = spatial_tangent(curve, s0)
        tm = spatial_tangent(curve, 0.5 * (s0 + s1))
        t1 = spatial_tangent(curve, s1)
        positions[i + 1] = positions[i] + (h / 6.0) * (t0 + 4.0 * tm + t1)
    return positions


@dataclass(frozen=True)
class SpatialPairReport:
    """Per-point tangent relations of the spatial curves of an involute pair.

    ``h_tt[i]`` is h(t, t*) at grid[i] and ``n_component[i]`` is <t*, n>.
    For a genuine pair t* has no n-component while h(t, t*) stays away from
    zero -- exactly the opposite of the R^3 involute condition, so the
    associated spatial curves never form an R^3 involute pair.
    ``expected_h_tt`` is kappa/sqrt(kappa^2 + k^2) per point.
    """

    grid: np.ndarray
    h_tt: np.ndarray
    n_component: np.ndarray
    expected_h_tt: np.ndarray

    @property
    def max_n_component(self) -> float:
        return float(np.max(np.abs(self.n_component)))

    @property
    def min_abs_h_tt(self) -> float:
        return float(np.min(np.abs(self.h_tt)))


def spatial_pair_check(evolute: CurveDefinition, params: InvoluteParams,
                       grid) -> SpatialPairReport:
    """Tangent relations between the spatial curves of an involute pair."""
    from .frenet import frenet_apparatus  # local import to keep module init light

    inv = involute_curve(evolute, params)
    grid = np.asarray(grid, dtype=float)
    h_tt = np.empty(len(grid))
    n_comp = np.empty(len(grid))
    expected = np.empty(len(grid))
    for i, s in enumerate(grid):
        frame = frenet_apparatus(evolute, s)
        sp = spatial_frame(frame)
        t = sp.t.to_vec4()
        n = sp.n.to_vec4()
        T_phi, N_phi = tangent_normal(inv, s)
        t_star = qmul_vec4(N_phi, conjugate_vec4(T_phi))
        h_tt[i] = float(np.dot(t, t_star))
        n_comp[i] = float(np.dot(t_star, n))
        expected[i] = frame.kappa / np.hypot(frame.kappa, frame.k)
    return SpatialPairReport(grid=grid, h_tt=h_tt, n_component=n_comp,
                             expected_h_tt=expected)


def rigid_align(points, reference) -> tuple[np.ndarray, float]:
    """Best proper-rigid alignment (rotation + translation) of points onto reference.

    Kabsch: SVD of the cross-covariance with a determinant correction so the
    rotation never reflects.  Returns (aligned points, RMS residual).
    """
    P = np.asarray(points, dtype=float)
    Q = np.asarray(reference, dtype=float)
    p_mean = P.mean(axis=0)
    q_mean = Q.mean(axis=0)
    U, _, Vt = np.linalg.svd((P - p_mean).T @ (Q - q_mean))
    d = np.sign(np.linalg.det(U @ Vt))
    R = U @ np.diag([1.0, 1.0, d]) @ Vt
    aligned = (P - p_mean) @ R + q_mean
    rms = float(np.sqrt(np.mean(np.sum((aligned - Q) ** 2, axis=1))))
    return aligned, rms


def discrete_curvature(points) -> np.ndarray:
    """Three-point circumradius curvature estimates along a polyline."""
    P = np.asarray(points, dtype=float)
    out = np.empty(len(P) - 2)
    for i in range(1, len(P) - 1):
        a, b, c = P[i - 1], P[i], P[i + 1]
        num = 2.0 * np.linalg.norm(np.cross(b - a, c - b))
        den = (np.linalg.norm(b - a) * np.linalg.norm(c - b)
               * np.linalg.norm(c - a))
        out[i - 1] = num / den if den > 0 else np.nan
    return out


def discrete_torsion(points) -> np.ndarray:
    """Four-point torsion estimates along a polyline (signed)."""
    P = np.asarray(points, dtype=float)
    e = np.diff(P, axis=0)
    out = np.empty(len(P) - 3)
    for i in range(1, len(P) - 2):
        e1, e2, e3 = e[i - 1], e[i], e[i + 1]
        c12 = np.cross(e1, e2)
        c23 = np.cross(e2, e3)
        den = np.linalg.norm(c12) * np.linalg.norm(c23) * np.linalg.norm(e2)
        if den == 0:
            out[i - 1] = np.nan
            continue
        sine = np.dot(np.cross(c12, c23), e2) / den
        out[i - 1] = np.arcsin(np.clip(sine, -1.0, 1.0)) / np.linalg.norm(e2)
    return out
