"""Self-verification suites over the built-in curve families.

Every geometric identity the package implements is re-checked here against
independent evaluations (finite differences, direct frame computations,
closed-form positions).  Checks are deterministic: fixed grids, fixed RNG
seed.  A few known-degenerate identities are evaluated and *reported* but not
gated (``gated=False``): the published long quotient for the involute's third
curvature, and the constant-curvature evolute reconstruction of curvatures,
whose joint hypothesis no genuine involute pair can satisfy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import frenet as _frenet
from .curves import CurveDefinition, build_curve
from .involute import (InvoluteParams, evolute_apparatus_from_involute,
                       evolute_position_from_involute, involute_curve,
                       predicted_involute_apparatus, wcurve_involute_frame)
from .quaternions import (DEFAULT_TOL, Quaternion, conjugate, cross4, hform,
                          qmul, qnorm)
from .spatial import (associated_spatial_curve, discrete_curvature,
                      discrete_torsion, rigid_align, spatial_frame,
                      spatial_pair_check)

SCHEMA_VERSION = 1

RNG_SEED = 20260810

#: Built-in verification pairs: evolute spec plus involute constant.
DH_SPEC = {"type": "double_helix", "a": 0.8, "p": 1.0, "b": 0.3, "q": -2.0}
C4_SPEC = {"type": "circular4", "A": 0.6, "omega": 1.0, "B": 0.5,
           "C": math.sqrt(1.0 - 0.36 - 0.25)}
PE_SPEC = {"type": "paper_example"}
INVOLUTE_C = 9.0
PE_INVOLUTE_C = 4.0


@dataclass(frozen=True)
class CheckResult:
    """One verification check.

    ``comparison`` is "le" (pass iff residual <= tolerance) or "ge" (pass iff
    residual >= tolerance, used for convergence-ratio and uniqueness checks).
    Non-gated entries are informational and do not affect the overall verdict.
    """

    check_id: str
    description: str
    residual: float
    tolerance: float
    passed: bool
    grid: str
    comparison: str = "le"
    gated: bool = True


@dataclass
class VerifyReport:
    schema: int
    suites: list[str]
    checks: list[CheckResult]
    resolved_reconstruction_sign: int | None
    overall_pass: bool

    def to_dict(self) -> dict:
        return {
            "schema": self.schema,
            "suites": self.suites,
            "overall_pass": self.overall_pass,
            "resolved_reconstruction_sign": self.resolved_reconstruction_sign,
            "checks": [
                {
                    "id": c.check_id,
                    "description": c.description,
                    "residual": c.residual,
                    "tolerance": c.tolerance,
                    "comparison": c.comparison,
                    "passed": c.passed,
                    "grid": c.grid,
                    "gated": c.gated,
                }
                for c in self.checks
            ],
        }

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            if not c.gated:
                status = "REPORT"
            op = "<=" if c.comparison == "le" else ">="
            lines.append(
                f"[{status}] {c.check_id}: residual={c.residual:.3e} "
                f"(pass iff {op} {c.tolerance:.3e}) on {c.grid}")
            if not c.gated or not c.passed:
                lines.append(f"         {c.description}")
        if self.resolved_reconstruction_sign is not None:
            lines.append(
                f"resolved reconstruction sign (radius-of-curvature offset): "
                f"{self.resolved_reconstruction_sign:+d}")
        lines.append("overall: " + ("PASS" if self.overall_pass else "FAIL"))
        return "\n".join(lines) + "\n"


class _Collector:
    def __init__(self, tol_overrides: dict[str, float] | None):
        self.checks: list[CheckResult] = []
        self.overrides = tol_overrides or {}

    def add(self, check_id: str, description: str, residual: float,
            tolerance: float, grid: str, comparison: str = "le",
            gated: bool = True) -> None:
        tolerance = self.overrides.get(check_id, tolerance)
        if comparison == "le":
            passed = residual <= tolerance
        else:
            passed = residual >= tolerance
        self.checks.append(CheckResult(
            check_id=check_id, description=description,
            residual=float(residual), tolerance=float(tolerance),
            passed=bool(passed), grid=grid, comparison=comparison,
            gated=gated))


def _sign_aligned_max_diff(got: np.ndarray, want: np.ndarray) -> float:
    direct = float(np.max(np.abs(got - want)))
    flipped = float(np.max(np.abs(got + want)))
    return min(direct, flipped)


# ---------------------------------------------------------------------------
# algebra suite
# ---------------------------------------------------------------------------

def _left_mult_matrix(p: Quaternion) -> np.ndarray:
    """Matrix M with M @ v4 = (p x q) as 4-vector, for q with coords v4."""
    cols = []
    for basis in (Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0),
                  Quaternion(0, 0, 0, 1), Quaternion(1, 0, 0, 0)):
        cols.append(qmul(p, basis).to_vec4())
    return np.array(cols).T


def run_algebra(collect: _Collector, base_tol: float) -> None:
    rng = np.random.default_rng(RNG_SEED)
    n_samples = 1000
    grid_desc = f"{n_samples} seeded random triples"

    quats = [Quaternion(*rng.uniform(-1.0, 1.0, size=4)) for _ in range(3 * n_samples)]
    triples = [tuple(quats[3 * i:3 * i + 3]) for i in range(n_samples)]

    basis = {"e1": Quaternion(0, 1, 0, 0), "e2": Quaternion(0, 0, 1, 0),
             "e3": Quaternion(0, 0, 0, 1), "e4": Quaternion(1, 0, 0, 0)}
    table_resid = 0.0
    expected = {("e1", "e2"): basis["e3"], ("e2", "e3"): basis["e1"],
                ("e3", "e1"): basis["e2"]}
    for (i, j), val in expected.items():
        table_resid = max(table_resid, float(np.max(np.abs(
            qmul(basis[i], basis[j]).to_vec4() - val.to_vec4()))))
        table_resid = max(table_resid, float(np.max(np.abs(
            qmul(basis[j], basis[i]).to_vec4() + val.to_vec4()))))
    for name in ("e1", "e2", "e3"):
        table_resid = max(table_resid, float(np.max(np.abs(
            qmul(basis[name], basis[name]).to_vec4() + basis["e4"].to_vec4()))))
    collect.add("algebra.product_basis_table",
                "basis products e_i x e_j follow the cyclic sign table",
                table_resid, 0.0, "12 basis products")

    res_assoc = res_normmul = res_antihom = res_hdot = 0.0
    res_spatial = res_decomp = res_normident = 0.0
    res_cross_orth = res_cross_vol = 0.0
    for p, q, r in triples:
        left = qmul(qmul(p, q), r).to_vec4()
        right = qmul(p, qmul(q, r)).to_vec4()
        res_assoc = max(res_assoc, float(np.max(np.abs(left - right))))

        npq = qnorm(qmul(p, q))
        res_normmul = max(res_normmul,
                          abs(npq - qnorm(p) * qnorm(q)) / max(npq, 1e-300))

        anti = qmul(conjugate(p), conjugate(q)).to_vec4()
        res_antihom = max(res_antihom, float(np.max(np.abs(
            conjugate(qmul(q, p)).to_vec4() - anti))))

        res_hdot = max(res_hdot, abs(hform(p, q)
                                     - float(np.dot(p.to_vec4(), q.to_vec4()))))

        sp = Quaternion(0.0, p.a, p.b, p.c)
        sq = Quaternion(0.0, q.a, q.b, q.c)
        prod = qmul(sp, sq)
        want = Quaternion.from_scalar_vector(
            -float(np.dot(sp.vector, sq.vector)), np.cross(sp.vector, sq.vector))
        res_spatial = max(res_spatial, float(np.max(np.abs(
            prod.to_vec4() - want.to_vec4()))))

        half_sum = (p + conjugate(p)).scaled(0.5)
        half_diff = (p - conjugate(p)).scaled(0.5)
        res_decomp = max(res_decomp, float(np.max(np.abs(
            (half_sum + half_diff).to_vec4() - p.to_vec4()))))

        nid = qmul(p, conjugate(p)).to_vec4()
        want_nid = np.array([0.0, 0.0, 0.0, qnorm(p) ** 2])
        res_normident = max(res_normident, float(np.max(np.abs(nid - want_nid))))

        a4, b4, c4 = p.to_vec4(), q.to_vec4(), r.to_vec4()
        w = cross4(a4, b4, c4)
        for v in (a4, b4, c4):
            res_cross_orth = max(res_cross_orth, abs(float(np.dot(w, v))))
        gram = np.array([[np.dot(x, y) for y in (a4, b4, c4)] for x in (a4, b4, c4)])
        vol = math.sqrt(max(float(np.linalg.det(gram)), 0.0))
        res_cross_vol = max(res_cross_vol,
                            abs(float(np.linalg.norm(w)) - vol) / max(vol, 1e-12))

    collect.add("algebra.associativity",
                "(p x q) x r equals p x (q x r)", res_assoc, 1e-12, grid_desc)
    collect.add("algebra.norm_multiplicativity",
                "|p x q| equals |p| |q| (relative)", res_normmul, 1e-12, grid_desc)
    collect.add("algebra.conjugation_antihomomorphism",
                "conj(q x p) equals conj(p) x conj(q)", res_antihom, 1e-12, grid_desc)
    collect.add("algebra.hform_dot_product",
                "hform equals the Euclidean dot product", res_hdot, 1e-12, grid_desc)
    collect.add("algebra.spatial_product_identity",
                "spatial product equals (-<u,v>, u ^ v)", res_spatial,
                4.0 * np.finfo(float).eps, grid_desc)
    collect.add("algebra.scalar_vector_decomposition",
                "q equals (q + conj q)/2 + (q - conj q)/2 exactly", res_decomp,
                0.0, grid_desc)
    collect.add("algebra.norm_identity",
                "q x conj(q) equals (|q|^2, 0, 0, 0)", res_normident, 1e-12,
                grid_desc)
    collect.add("algebra.cross4_orthogonality",
                "cross4(a,b,c) is orthogonal to a, b and c", res_cross_orth,
                1e-12, grid_desc)
    collect.add("algebra.cross4_gram_volume",
                "|cross4(a,b,c)| equals the spanned 3-volume (relative)",
                res_cross_vol, 1e-10, grid_desc)


# ---------------------------------------------------------------------------
# frenet suite
# ---------------------------------------------------------------------------

def _frame_invariant_residuals(curve: CurveDefinition, grid) -> tuple[float, float]:
    worst_on = 0.0
    worst_det = 0.0
    for s in grid:
        f = _frenet.frenet_apparatus(curve, s)
        mat = np.array(f.vectors())
        gram = mat @ mat.T
        worst_on = max(worst_on, float(np.max(np.abs(gram - np.eye(4)))))
        worst_det = max(worst_det, abs(float(np.linalg.det(mat)) - 1.0))
    return worst_on, worst_det


def run_frenet(collect: _Collector, base_tol: float) -> None:
    curves = {"paper_example": build_curve(PE_SPEC),
              "circular4": build_curve(C4_SPEC),
              "double_helix": build_curve(DH_SPEC)}
    grid = np.linspace(0.2, 11.0, 96)

    for name, curve in curves.items():
        on, det = _frame_invariant_residuals(curve, grid)
        collect.add(f"frenet.orthonormality.{name}",
                    "frame vectors are unit and pairwise h-orthogonal",
                    on, base_tol, "96 points on [0.2, 11]")
        collect.add(f"frenet.determinant.{name}",
                    "det(T, N, B, E) equals +1",
                    det, base_tol, "96 points on [0.2, 11]")

        vals = np.array([[f.kappa, f.k, f.bitorsion]
                         for f in (_frenet.frenet_apparatus(curve, s) for s in grid)])
        spread = float(np.max(vals.max(axis=0) - vals.min(axis=0)))
        collect.add(f"frenet.wcurve_constancy.{name}",
                    "kappa, k and bitorsion are constant along the curve",
                    spread, 1e-8, "96 points on [0.2, 11]")

    h = 1e-5
    worst = 0.0
    pe = curves["paper_example"]
    for s in (0.7, 2.9, 5.3):
        f0 = _frenet.frenet_apparatus(pe, s)
        tp = _frenet.frenet_apparatus(pe, s + h).T
        tm = _frenet.frenet_apparatus(pe, s - h).T
        fd_norm = float(np.linalg.norm((tp - tm) / (2 * h)))
        worst = max(worst, abs(fd_norm - f0.kappa))
    collect.add("frenet.kappa_fd_consistency",
                "kappa equals |FD(T)| for the unit-speed built-in",
                worst, 1e-8, "3 points, h=1e-5")

    base = curves["paper_example"]
    stretched = CurveDefinition(
        0.0, 2.0 * math.pi,
        lambda u, order: (2.0 ** order) * base.eval(2.0 * u, order),
        provenance="analytic")
    worst = 0.0
    for u in np.linspace(0.2, 5.8, 24):
        fa = _frenet.frenet_apparatus(base, 2.0 * u)
        fb = _frenet.frenet_apparatus(stretched, u)
        for va, vb in zip(fa.vectors(), fb.vectors()):
            worst = max(worst, float(np.max(np.abs(va - vb))))
        worst = max(worst, abs(fa.kappa - fb.kappa), abs(fa.k - fb.k),
                    abs(fa.bitorsion - fb.bitorsion))
    collect.add("frenet.parametrization_covariance",
                "apparatus is unchanged under the rescaling s -> 2s",
                worst, base_tol, "24 corresponding points")

    for name in ("paper_example", "double_helix"):
        curve = curves[name]
        hs = [1e-3 / 2**j for j in range(4)]
        maxima = []
        for hh in hs:
            maxima.append(max(float(np.max(_frenet.serret_frenet_residual(curve, s, hh)))
                              for s in (1.0, 2.5)))
        ratios = [maxima[i] / maxima[i + 1] for i in range(len(maxima) - 1)]
        collect.add(f"frenet.ode_residual_halving.{name}",
                    "each halving of h shrinks the worst Frenet ODE residual >= 3.5x",
                    min(ratios), 3.5, "h = 1e-3 .. 1.25e-4, s in {1.0, 2.5}",
                    comparison="ge")
        final = max(float(np.max(_frenet.serret_frenet_residual(curve, s, 1e-4)))
                    for s in (1.0, 2.5))
        collect.add(f"frenet.ode_residual_magnitude.{name}",
                    "worst Frenet ODE residual at h=1e-4",
                    final, 1e-6, "h=1e-4, s in {1.0, 2.5}")


# ---------------------------------------------------------------------------
# involute suite
# ---------------------------------------------------------------------------

def run_involute(collect: _Collector, base_tol: float) -> None:
    pairs = {
        "paper_example": (build_curve(PE_SPEC), InvoluteParams(PE_INVOLUTE_C)),
        "circular4": (build_curve(C4_SPEC), InvoluteParams(INVOLUTE_C)),
        "double_helix": (build_curve(DH_SPEC), InvoluteParams(INVOLUTE_C)),
    }
    rng = np.random.default_rng(RNG_SEED)

    for name, (evolute, params) in pairs.items():
        inv = involute_curve(evolute, params)
        grid = np.array([s for s in rng.uniform(0.2, 12.0, 100) if inv.contains(s)])

        worst = max(abs(float(np.linalg.norm(inv.eval(s) - evolute.eval(s)))
                        - abs(params.c - s)) for s in grid)
        collect.add(f"involute.distance_law.{name}",
                    "|phi(s) - xi(s)| equals |c - s|", worst, 1e-9,
                    "100 seeded random points")

        worst = max(abs(float(np.dot(_frenet.tangent_normal(inv, s)[0],
                                     _frenet.tangent_normal(evolute, s)[0])))
                    for s in grid)
        collect.add(f"involute.tangency.{name}",
                    "h(T_phi, T_xi) vanishes at corresponding points", worst,
                    1e-6, "100 seeded random points")

        worst = 0.0
        for s in grid:
            kappa = _frenet.frenet_apparatus(evolute, s).kappa
            worst = max(worst, abs(float(np.linalg.norm(inv.eval(s, 1)))
                                   - kappa * abs(params.c - s)))
        collect.add(f"involute.speed_law.{name}",
                    "|dphi/ds| equals kappa_xi |c - s|", worst, 1e-8,
                    "100 seeded random points")

    # Prediction vs direct computation (needs nonvanishing bitorsion).
    evolute, params = pairs["double_helix"]
    inv = involute_curve(evolute, params)
    grid = np.linspace(0.25, 6.0, 48)
    worst_frame = 0.0
    worst_kappa = worst_kstar = 0.0
    worst_quotient = 0.0
    for s in grid:
        pred = predicted_involute_apparatus(evolute, params, s)
        direct = _frenet.frenet_apparatus(inv, s)
        for pv, dv in zip((pred.T, pred.N, pred.B, pred.E), direct.vectors()):
            worst_frame = max(worst_frame, _sign_aligned_max_diff(pv, dv))
        worst_kappa = max(worst_kappa,
                          abs(pred.kappa - direct.kappa) / direct.kappa)
        worst_kstar = max(worst_kstar, abs(pred.k_star - direct.k) / direct.k)
        worst_quotient = max(worst_quotient,
                             abs(pred.bitorsion_star - direct.bitorsion))
    collect.add("involute.prediction_frames.double_helix",
                "closed-form involute frame matches the direct frame (sign-aligned)",
                worst_frame, 1e-5, "48 points on [0.25, 6]")
    collect.add("involute.prediction_kappa.double_helix",
                "closed-form kappa_phi matches the direct value (relative)",
                worst_kappa, 1e-4, "48 points on [0.25, 6]")
    collect.add("involute.prediction_kstar.double_helix",
                "closed-form k* matches the direct value (relative)",
                worst_kstar, 1e-4, "48 points on [0.25, 6]")
    collect.add("involute.prediction_bitorsion_quotient.double_helix",
                "published long quotient for the involute's third curvature vs "
                "the direct value; known not to agree, reported only",
                worst_quotient, 1e-6, "48 points on [0.25, 6]", gated=False)

    # Constant-curvature frame identities.
    worst_tn = 0.0
    evolute_c4, params_c4 = pairs["circular4"]
    inv_c4 = involute_curve(evolute_c4, params_c4)
    worst_orth = 0.0
    for s in np.linspace(0.25, 6.0, 24):
        frame = _frenet.frenet_apparatus(evolute_c4, s)
        Tw, Nw, Bw, Ew = wcurve_involute_frame(frame)
        T_dir, N_dir = _frenet.tangent_normal(inv_c4, s)
        worst_tn = max(worst_tn, _sign_aligned_max_diff(Tw, T_dir),
                       _sign_aligned_max_diff(Nw, N_dir))
        mat = np.array([Tw, Nw, Bw, Ew])
        worst_orth = max(worst_orth, float(np.max(np.abs(mat @ mat.T - np.eye(4)))))
    collect.add("involute.wcurve_frame_tn.circular4",
                "constant-curvature frame identities for T_phi and N_phi "
                "(B_phi, E_phi are 0/0-degenerate on this zero-bitorsion family)",
                worst_tn, 1e-8, "24 points on [0.25, 6]")
    collect.add("involute.wcurve_frame_orthonormal.circular4",
                "constant-curvature closed-form frame is orthonormal",
                worst_orth, 1e-12, "24 points on [0.25, 6]")

    worst_full = 0.0
    for s in np.linspace(0.25, 6.0, 24):
        frame = _frenet.frenet_apparatus(evolute, s)
        wvecs = wcurve_involute_frame(frame)
        direct = _frenet.frenet_apparatus(inv, s)
        for wv, dv in zip(wvecs, direct.vectors()):
            worst_full = max(worst_full, _sign_aligned_max_diff(wv, dv))
    collect.add("involute.wcurve_frame_full.double_helix",
                "all four constant-curvature frame identities (sign-aligned)",
                worst_full, 1e-8, "24 points on [0.25, 6]")


# ---------------------------------------------------------------------------
# evolute suite
# ---------------------------------------------------------------------------

def run_evolute(collect: _Collector, base_tol: float) -> tuple[int | None]:
    evolute = build_curve(DH_SPEC)
    params = InvoluteParams(INVOLUTE_C)
    inv = involute_curve(evolute, params)
    grid = np.linspace(0.25, 6.0, 48)

    residuals = {1: 0.0, -1: 0.0}
    worst_mu = worst_gamma = 0.0
    for s in grid:
        frame_phi = _frenet.frenet_apparatus(inv, s)
        frame_xi = _frenet.frenet_apparatus(evolute, s)
        target = evolute.eval(s)
        phi_pos = inv.eval(s)
        for sign in (1, -1):
            offset = evolute_position_from_involute(
                frame_phi, k=frame_xi.k, kappa_xi=frame_xi.kappa, sign=sign)
            residuals[sign] = max(residuals[sign],
                                  float(np.linalg.norm(phi_pos + offset - target)))
        diff = target - phi_pos
        rho = 1.0 / frame_phi.kappa
        worst_mu = max(worst_mu, abs(float(np.dot(frame_phi.B, diff))))
        worst_gamma = max(worst_gamma,
                          abs(float(np.dot(frame_phi.E, diff))
                              + rho * frame_xi.k / frame_xi.kappa))

    resolved = 1 if residuals[1] <= residuals[-1] else -1
    collect.add("evolute.reconstruction_resolved_sign",
                f"offset with the resolved sign ({resolved:+d}) reproduces the "
                f"evolute uniformly; +1 residual {residuals[1]:.3e}, "
                f"-1 residual {residuals[-1]:.3e}",
                residuals[resolved], 1e-6, "48 points on [0.25, 6]")
    collect.add("evolute.reconstruction_unique_sign",
                "the rejected sign fails by a macroscopic margin",
                residuals[-resolved], 1e-3, "48 points on [0.25, 6]",
                comparison="ge")
    collect.add("evolute.mu_coefficient",
                "h(B_phi, xi - phi) vanishes", worst_mu, 1e-6,
                "48 points on [0.25, 6]")
    collect.add("evolute.gamma_coefficient",
                "h(E_phi, xi - phi) equals -rho k / kappa_xi", worst_gamma,
                1e-6, "48 points on [0.25, 6]")

    worst_tangent = worst_det = 0.0
    worst_curv = 0.0
    for s in grid[::4]:
        frame_phi = _frenet.frenet_apparatus(inv, s)
        frame_xi = _frenet.frenet_apparatus(evolute, s)
        rec = evolute_apparatus_from_involute(frame_phi)
        worst_tangent = max(worst_tangent,
                            float(np.max(np.abs(rec.T - frame_phi.B))))
        mat = np.array([rec.T, rec.N, rec.B, rec.E])
        worst_det = max(worst_det, abs(float(np.linalg.det(mat)) - 1.0))
        for got, want in ((rec.kappa, frame_xi.kappa), (rec.k, frame_xi.k),
                          (rec.bitorsion, frame_xi.bitorsion)):
            worst_curv = max(worst_curv, abs(got - want) / abs(want))
    collect.add("evolute.apparatus_tangent_identity",
                "reconstructed evolute tangent equals the involute's B_phi",
                worst_tangent, 1e-12, "12 points on [0.25, 6]")
    collect.add("evolute.apparatus_frame_orientation",
                "reconstructed frame quadruple has determinant +1",
                worst_det, base_tol, "12 points on [0.25, 6]")
    collect.add("evolute.apparatus_curvature_roundtrip",
                "closed-form curvature reconstruction vs the evolute's true "
                "constants (relative); its constant-curvature joint hypothesis "
                "is unsatisfiable for genuine pairs, reported only",
                worst_curv, 1e-4, "12 points on [0.25, 6]", gated=False)
    return (resolved,)


# ---------------------------------------------------------------------------
# spatial suite
# ---------------------------------------------------------------------------

def run_spatial(collect: _Collector, base_tol: float) -> None:
    from .quaternions import qmul_vec4

    curves = {"paper_example": build_curve(PE_SPEC),
              "double_helix": build_curve(DH_SPEC)}
    grid = np.linspace(0.2, 11.0, 48)

    for name, curve in curves.items():
        worst_scalar = worst_orth = worst_recon = 0.0
        for s in grid:
            frame = _frenet.frenet_apparatus(curve, s)
            sp = spatial_frame(frame)
            vecs = [sp.t.to_vec4(), sp.n.to_vec4(), sp.b.to_vec4()]
            for v in vecs:
                worst_scalar = max(worst_scalar, abs(v[3]))
                worst_orth = max(worst_orth, abs(float(np.dot(v, v)) - 1.0))
            for i in range(3):
                for j in range(i + 1, 3):
                    worst_orth = max(worst_orth,
                                     abs(float(np.dot(vecs[i], vecs[j]))))
            for v, target in zip(vecs, (frame.N, frame.B, frame.E)):
                worst_recon = max(worst_recon, float(np.max(np.abs(
                    qmul_vec4(v, frame.T) - target))))
        collect.add(f"spatial.recovered_spatial.{name}",
                    "recovered t, n, b have vanishing scalar parts",
                    worst_scalar, base_tol, "48 points on [0.2, 11]")
        collect.add(f"spatial.recovered_orthonormal.{name}",
                    "recovered t, n, b are unit and mutually h-orthogonal",
                    worst_orth, base_tol, "48 points on [0.2, 11]")
        collect.add(f"spatial.reconstruction_identities.{name}",
                    "t x T = N, n x T = B, b x T = E reproduce the 4D frame",
                    worst_recon, base_tol, "48 points on [0.2, 11]")

    pe = curves["paper_example"]
    agrid = np.linspace(0.0, 2.0 * math.pi, 257)
    alpha = associated_spatial_curve(pe, agrid, anchor=(0.0, math.sqrt(2.0), 0.0))
    closed = np.stack([agrid / math.sqrt(2.0),
                       math.sqrt(2.0) * np.cos(agrid / 2.0),
                       math.sqrt(2.0) * np.sin(agrid / 2.0)], axis=1)
    _, rms = rigid_align(alpha, closed)
    collect.add("spatial.alpha_closed_form",
                "integrated spatial curve matches its closed form after rigid "
                "alignment (RMS)", rms, 1e-5, "257 points on [0, 2pi]")

    target = math.sqrt(2.0) / 4.0
    curv = discrete_curvature(alpha)
    collect.add("spatial.alpha_discrete_curvature",
                "discrete-circumradius curvature of the spatial curve",
                float(np.max(np.abs(curv - target))), 1e-4,
                "257 points on [0, 2pi]")
    tors = discrete_torsion(alpha)
    collect.add("spatial.alpha_discrete_torsion",
                "discrete four-point torsion of the spatial curve",
                float(np.max(np.abs(tors - target))), 1e-4,
                "257 points on [0, 2pi]")

    for name, c_val in (("paper_example", PE_INVOLUTE_C), ("double_helix", INVOLUTE_C)):
        report = spatial_pair_check(curves[name], InvoluteParams(c_val),
                                    np.linspace(0.25, 3.5, 24))
        collect.add(f"spatial.pair_n_component.{name}",
                    "the involute's spatial tangent has no n-component",
                    report.max_n_component, 1e-6, "24 points on [0.25, 3.5]")
        collect.add(f"spatial.pair_t_component.{name}",
                    "h(t, t*) equals kappa / sqrt(kappa^2 + k^2)",
                    float(np.max(np.abs(report.h_tt - report.expected_h_tt))),
                    1e-6, "24 points on [0.25, 3.5]")


SUITES = {
    "algebra": run_algebra,
    "frenet": run_frenet,
    "involute": run_involute,
    "evolute": run_evolute,
    "spatial": run_spatial,
}

SUITE_ORDER = ("algebra", "frenet", "involute", "evolute", "spatial")


def run_suites(suites=None, tol_overrides: dict[str, float] | None = None,
               base_tol: float | None = None) -> VerifyReport:
    """Run the named verification suites (all of them by default)."""
    if suites is None or suites == "all" or suites == ["all"]:
        names = list(SUITE_ORDER)
    else:
        names = list(suites)
        unknown = [n for n in names if n not in SUITES]
        if unknown:
            raise ValueError(f"unknown suites: {unknown}")
    if base_tol is None:
        base_tol = DEFAULT_TOL

    collect = _Collector(tol_overrides)
    resolved_sign: int | None = None
    for name in names:
        result = SUITES[name](collect, base_tol)
        if name == "evolute" and result is not None:
            resolved_sign = result[0]
    overall = all(c.passed for c in collect.checks if c.gated)
    return VerifyReport(schema=SCHEMA_VERSION, suites=names,
                        checks=collect.checks,
                        resolved_reconstruction_sign=resolved_sign,
                        overall_pass=overall)
