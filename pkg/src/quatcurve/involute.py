"""Involute construction and the closed-form involute/evolute apparatus maps.

An involute of a unit-speed curve xi is phi(s) = xi(s) + (c - s) xi'(s); the
pair satisfies |phi(s) - xi(s)| = |c - s| and h(T_phi, T_xi) = 0.  The
involute is kept in the evolute's parameter s (the frame formulas are
parametrization covariant), with an excluded band around the cusp s = c.

Closed forms implemented here, writing Q = |c - s|, S = sqrt(kappa^2 + k^2),
w = bitorsion of the evolute, and rad = k^4 w^2 + kappa^2 k^2 w^2 +
(kappa' k - kappa k')^2:

* T_phi = N_xi
* N_phi = (-kappa T_xi + k B_xi) / S
* E_phi ~ (k^2 w T_xi + kappa k w B_xi + (kappa' k - kappa k') E_xi) / sqrt(rad)
* B_phi ~ ((kappa' k - kappa k')(k T_xi + kappa B_xi) - k w S^2 E_xi) / (S sqrt(rad))
* kappa_phi = S / (kappa Q)
* k_star    = sqrt(rad) / (kappa Q S^2)

The k_star denominator carries S^2: the direct second curvature of the
constructed involute equals |wedge| |phi'| / |normal numerator| =
sqrt(rad) / (kappa Q S^2), confirmed numerically to machine precision.
``predicted_bitorsion_quotient`` evaluates the published long quotient for
the involute's third curvature verbatim; it does not agree with the directly
computed value and is exported for reporting, never asserted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curves import CurveDefinition, default_step, is_unit_speed
from .errors import (CurvatureZero, DenominatorZero, EmptyDomain,
                     HigherFrameIndeterminate, InvoluteSingular, NotUnitSpeed)
from .frenet import FrenetFrame4, frenet_apparatus, tangent_normal

#: Fraction of the evolute domain length used as the default cusp exclusion.
DEFAULT_EXCLUSION_FRACTION = 1e-3

#: Relative threshold on the radicand below which the closed-form higher
#: frame vectors are treated as 0/0-indeterminate.
RADICAND_RTOL = 1e-18


@dataclass(frozen=True)
class InvoluteParams:
    """Integration constant c (cusp location) and cusp exclusion radius."""

    c: float
    exclusion_tol: float | None = None

    def resolved_exclusion(self, curve: CurveDefinition) -> float:
        if self.exclusion_tol is not None:
            if self.exclusion_tol <= 0:
                raise ValueError("exclusion_tol must be > 0")
            return self.exclusion_tol
        return DEFAULT_EXCLUSION_FRACTION * curve.domain_length


@dataclass(frozen=True)
class PredictedInvoluteApparatus:
    """Involute frame and curvatures predicted from the evolute's apparatus."""

    s: float
    T: np.ndarray
    N: np.ndarray
    B: np.ndarray
    E: np.ndarray
    kappa: float
    k_star: float
    bitorsion_star: float  # published quotient, report-only
    eta: int


@dataclass(frozen=True)
class EvoluteApparatus:
    """Evolute frame and curvatures predicted from an involute's apparatus."""

    T: np.ndarray
    N: np.ndarray
    B: np.ndarray
    E: np.ndarray
    kappa: float
    k: float
    bitorsion: float


def involute_curve(evolute: CurveDefinition, params: InvoluteParams) -> CurveDefinition:
    """The involute phi(s) = xi(s) + (c - s) xi'(s) as a CurveDefinition.

    Derivatives shift analytically: phi^(k) = (c - s) xi^(k+1) + (1 - k) xi^(k)
    for k >= 1.  The returned domain excludes (c - tol, c + tol) when the cusp
    lies inside; raises NotUnitSpeed (checked at 1e-6 on a coarse grid) and
    EmptyDomain (exclusion swallows the whole interval).
    """
    check_grid = np.linspace(evolute.s_min, evolute.s_max, 33)
    ok, worst = is_unit_speed(evolute, check_grid, tol=1e-6)
    if not ok:
        raise NotUnitSpeed(
            f"evolute speed deviates from 1 by {worst:.3e} (tol 1e-06)")

    tol = params.resolved_exclusion(evolute)
    c = params.c
    exclusions = list(evolute.exclusions)
    if c - tol <= evolute.s_min and c + tol >= evolute.s_max:
        raise EmptyDomain("cusp exclusion covers the entire domain")
    if evolute.s_min < c + tol and c - tol < evolute.s_max:
        exclusions.append((c - tol, c + tol))

    def evaluate(s: float, order: int) -> np.ndarray:
        lam = c - s
        if order == 0:
            return evolute.eval(s, 0) + lam * evolute.eval(s, 1)
        return lam * evolute.eval(s, order + 1) + (1 - order) * evolute.eval(s, order)

    return CurveDefinition(
        evolute.s_min, evolute.s_max, evaluate,
        provenance=evolute.provenance,
        max_analytic_order=max(evolute.max_analytic_order - 1, 0),
        exclusions=tuple(exclusions))


def check_involute_definition(evolute: CurveDefinition, involute: CurveDefinition,
                              grid) -> float:
    """Max |h(T_phi, T_xi)| over the grid (0 for a genuine involute pair)."""
    worst = 0.0
    for s in np.asarray(grid, dtype=float):
        t_evo, _ = tangent_normal(evolute, s)
        t_inv, _ = tangent_normal(involute, s)
        worst = max(worst, abs(float(np.dot(t_evo, t_inv))))
    return worst


def _curvature_derivatives(evolute: CurveDefinition, s: float,
                           h: float | None) -> tuple[FrenetFrame4, float, float,
                                                     float, float, float]:
    """Frame at s plus central-difference kappa', kappa'', k', k'', bitorsion'."""
    if h is None:
        h = default_step(2, scale=s)
    f0 = frenet_apparatus(evolute, s)
    fp = frenet_apparatus(evolute, s + h)
    fm = frenet_apparatus(evolute, s - h)
    kap_d = (fp.kappa - fm.kappa) / (2.0 * h)
    kap_dd = (fp.kappa - 2.0 * f0.kappa + fm.kappa) / h**2
    k_d = (fp.k - fm.k) / (2.0 * h)
    k_dd = (fp.k - 2.0 * f0.k + fm.k) / h**2
    w_d = (fp.bitorsion - fm.bitorsion) / (2.0 * h)
    return f0, kap_d, kap_dd, k_d, k_dd, w_d


def predicted_involute_curvatures(evolute: CurveDefinition, params: InvoluteParams,
                                  s: float, h: float | None = None
                                  ) -> tuple[float, float, float]:
    """(kappa_phi, k_star, bitorsion_star-quotient) without building frames.

    bitorsion_star is the published long quotient (report-only; see module
    docstring).  Raises InvoluteSingular inside the cusp exclusion band and
    CurvatureZero where the evolute's first curvature vanishes.
    """
    tol = params.resolved_exclusion(evolute)
    lam = params.c - s
    if abs(lam) <= tol:
        raise InvoluteSingular(f"|c - s| = {abs(lam):.3e} <= {tol:.3e}")
    f0, kap_d, kap_dd, k_d, k_dd, w_d = _curvature_derivatives(evolute, s, h)
    kap, k, w = f0.kappa, f0.k, f0.bitorsion
    if kap <= 0.0:
        raise CurvatureZero(f"evolute kappa vanishes at s={s}")
    q_abs = abs(lam)
    s2 = kap**2 + k**2
    cross_term = kap_d * k - kap * k_d
    rad = k**4 * w**2 + kap**2 * k**2 * w**2 + cross_term**2
    kappa_phi = math.sqrt(s2) / (kap * q_abs)
    k_star = math.sqrt(max(rad, 0.0)) / (kap * q_abs * s2)
    bitorsion_star = predicted_bitorsion_quotient(
        lam, kap, k, w, kap_d, kap_dd, k_d, k_dd, w_d)
    return kappa_phi, k_star, bitorsion_star


def predicted_bitorsion_quotient(lam: float, kap: float, k: float, w: float,
                                 kap_d: float, kap_dd: float, k_d: float,
                                 k_dd: float, w_d: float) -> float:
    """The published closed-form quotient for the involute's third curvature.

    Evaluated verbatim (report-only).  Returns nan when its denominator
    vanishes.
    """
    num = lam * (-kap * kap_dd * k**2 * w
                 + 2.0 * kap * kap_d * k * k_d * w
                 + kap**2 * k * k_dd * w
                 - 2.0 * kap**2 * k**2 * w
                 - kap**2 * k**2 * w**3
                 - kap**2 * k * k_d * w_d)
    s2 = kap**2 + k**2
    den = (lam**2 * kap**2 * (k**4 * w**2 + kap**2 * k**2 * w**2) / math.sqrt(s2)
           + (kap_d * k - kap * k_d)**2)
    if den == 0.0:
        return float("nan")
    return num / den


def predicted_involute_apparatus(evolute: CurveDefinition, params: InvoluteParams,
                                 s: float, h: float | None = None
                                 ) -> PredictedInvoluteApparatus:
    """Involute frame and curvatures at s from the evolute's apparatus alone.

    Curvature derivatives come from central differences of the evolute's
    curvature functions.  Raises InvoluteSingular inside the cusp band and
    HigherFrameIndeterminate when the radicand underflows (the exception
    carries kappa and k_star, which stay well defined).
    """
    tol = params.resolved_exclusion(evolute)
    lam = params.c - s
    if abs(lam) <= tol:
        raise InvoluteSingular(f"|c - s| = {abs(lam):.3e} <= {tol:.3e}")
    f0, kap_d, kap_dd, k_d, k_dd, w_d = _curvature_derivatives(evolute, s, h)
    kap, k, w = f0.kappa, f0.k, f0.bitorsion
    if kap <= 0.0:
        raise CurvatureZero(f"evolute kappa vanishes at s={s}")
    q_abs = abs(lam)
    s2 = kap**2 + k**2
    s1 = math.sqrt(s2)
    cross_term = kap_d * k - kap * k_d
    rad = k**4 * w**2 + kap**2 * k**2 * w**2 + cross_term**2

    kappa_phi = s1 / (kap * q_abs)
    k_star = math.sqrt(max(rad, 0.0)) / (kap * q_abs * s2)
    bitorsion_star = predicted_bitorsion_quotient(
        lam, kap, k, w, kap_d, kap_dd, k_d, k_dd, w_d)

    if rad <= RADICAND_RTOL * s2**3:
        raise HigherFrameIndeterminate(
            f"radicand {rad:.3e} below {RADICAND_RTOL:.0e} * (kappa^2+k^2)^3",
            kappa=kappa_phi, k_star=k_star)

    T_phi = f0.N
    N_phi = (-kap * f0.T + k * f0.B) / s1
    sqrt_rad = math.sqrt(rad)
    E_phi = (k**2 * w * f0.T + kap * k * w * f0.B + cross_term * f0.E) / sqrt_rad
    B_phi = (cross_term * (k * f0.T + kap * f0.B) - k * w * s2 * f0.E) / (s1 * sqrt_rad)

    det = float(np.linalg.det(np.array([T_phi, N_phi, B_phi, E_phi])))
    eta = 1 if det > 0 else -1
    E_phi = eta * E_phi

    return PredictedInvoluteApparatus(
        s=float(s), T=T_phi, N=N_phi, B=B_phi, E=E_phi, kappa=kappa_phi,
        k_star=k_star, bitorsion_star=bitorsion_star, eta=eta)


def wcurve_involute_frame(frame: FrenetFrame4, eta: int = 1
                          ) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Involute frame of a constant-curvature evolute, from its frame alone.

    T_phi = N;  N_phi = (-kappa T + k B)/S;  B_phi = eta E;
    E_phi = eta (k T + kappa B)/S, with S = sqrt(kappa^2 + k^2).  The caller
    is responsible for the w-curve hypothesis.  The quadruple is orthonormal
    but left-handed for either eta (flipping eta flips B_phi and E_phi
    together), so eta is a free convention, not fixed by the determinant.
    """
    kap, k = frame.kappa, frame.k
    s2 = kap**2 + k**2
    if s2 <= 0.0:
        raise CurvatureZero("kappa^2 + k^2 vanishes")
    s1 = math.sqrt(s2)
    T_phi = frame.N.copy()
    N_phi = (-kap * frame.T + k * frame.B) / s1
    B_phi = float(eta) * frame.E
    E_phi = float(eta) * (k * frame.T + kap * frame.B) / s1
    return T_phi, N_phi, B_phi, E_phi


def evolute_position_from_involute(frame_phi: FrenetFrame4, k: float,
                                   kappa_xi: float, sign: int) -> np.ndarray:
    """Offset from phi(s*) to the evolute point: sign*rho*N_phi - rho*(k/kappa_xi)*E_phi.

    rho = 1/kappa_phi.  The sign argument exists because the two published
    statements of this identity disagree on the N_phi term; callers (and the
    verify suite) resolve it empirically.  Raises CurvatureZero.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if frame_phi.kappa <= 0.0:
        raise CurvatureZero("involute kappa must be positive")
    if kappa_xi == 0.0:
        raise CurvatureZero("evolute kappa must be nonzero")
    rho = 1.0 / frame_phi.kappa
    return float(sign) * rho * frame_phi.N - rho * (k / kappa_xi) * frame_phi.E


def evolute_apparatus_from_involute(frame_phi: FrenetFrame4, eta: int = 1
                                    ) -> EvoluteApparatus:
    """Evolute frame and curvatures from an involute's apparatus (closed forms).

    Writing D = k_star^2 + w^2 with w the involute's bitorsion:

    T = B_phi;  N = (-k_star N_phi + w E_phi)/sqrt(D);
    E = eta (w N_phi + k_star E_phi)/sqrt(D);  B = eta T_phi;

    kappa = kappa_phi sqrt(D^3) / (k_star (D + kappa_phi w))
    k     = kappa_phi^2 sqrt(D) / (D + kappa_phi w)
    bitorsion = kappa_phi^2 w sqrt(D) / (k_star (D + kappa_phi w))

    These assume both curves have constant curvatures; that joint hypothesis
    is not realizable by genuine involute pairs (the involute of a
    constant-curvature curve never has constant curvature), so on real pairs
    the curvature outputs do not reproduce the evolute -- see the verify
    suite, which reports the residual.  The determinant of the returned
    quadruple is +1 for either eta (eta flips B and E together), so eta is a
    free convention.
    """
    ks = frame_phi.k
    w = frame_phi.bitorsion
    kap_phi = frame_phi.kappa
    if kap_phi <= 0.0:
        raise CurvatureZero("involute kappa must be positive")
    d = ks**2 + w**2
    if d <= 0.0:
        raise HigherFrameIndeterminate("k_star^2 + bitorsion^2 vanishes")
    closing = d + kap_phi * w
    if ks == 0.0 or closing == 0.0:
        raise DenominatorZero(
            f"closing denominator k_star*(D + kappa_phi*w) = {ks * closing}")
    sqrt_d = math.sqrt(d)
    T = frame_phi.B.copy()
    N = (-ks * frame_phi.N + w * frame_phi.E) / sqrt_d
    E = float(eta) * (w * frame_phi.N + ks * frame_phi.E) / sqrt_d
    B = float(eta) * frame_phi.T
    kappa = kap_phi * sqrt_d**3 / (ks * closing)
    k = kap_phi**2 * sqrt_d / closing
    bitorsion = kap_phi**2 * w * sqrt_d / (ks * closing)
    return EvoluteApparatus(T=T, N=N, B=B, E=E, kappa=kappa, k=k,
                            bitorsion=bitorsion)
