"""Parametric curves in R^4 with derivative access up to order 5.

Built-in families (all analytic to order 5):

* ``paper_example`` -- (cos(s/2) - sin(s/2), cos(s/2) + sin(s/2), s/2, s/2),
  an arc-length parametrized curve with constant curvatures.
* ``circular4``     -- (A cos(omega s), A sin(omega s), B s, C s); unit speed
  iff A^2 omega^2 + B^2 + C^2 = 1.
* ``double_helix``  -- (a cos(p s), a sin(p s), b cos(q s), b sin(q s)); unit
  speed iff a^2 p^2 + b^2 q^2 = 1.
* ``samples``       -- cubic-spline interpolant of tabulated points.  Orders
  <= 3 come from the spline; orders 4-5 are finite differences of the spline's
  third derivative and are noise-amplified -- treat them as rough estimates.

Coordinates are (x1, x2, x3, x4) with the quaternion scalar component last.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import DomainExceeded, EmptyDomain, SpecInvalid

#: Default parameter interval for the built-in families.
DEFAULT_DOMAIN = (0.0, 4.0 * math.pi)

MAX_ORDER = 5

_EPS = float(np.finfo(float).eps)


def default_step(order: int, scale: float = 1.0) -> float:
    """Default finite-difference step eps**(1/(order+2)), scaled.

    Balances truncation against rounding error for an order-2 stencil of the
    given derivative order; ``scale`` is the local parameter scale
    (max(1, |s|) at the evaluation point).
    """
    return _EPS ** (1.0 / (order + 2)) * max(1.0, abs(scale))


# Central stencils: order -> (offsets, weights, power of h in denominator).
_STENCILS = {
    1: ((-1, 1), (-0.5, 0.5), 1),
    2: ((-1, 0, 1), (1.0, -2.0, 1.0), 2),
    3: ((-2, -1, 1, 2), (-0.5, 1.0, -1.0, 0.5), 3),
    4: ((-2, -1, 0, 1, 2), (1.0, -4.0, 6.0, -4.0, 1.0), 4),
    5: ((-3, -2, -1, 1, 2, 3), (-0.5, 2.0, -2.5, 2.5, -2.0, 0.5), 5),
}

#: Orders that get one Richardson extrapolation step (error O(h^4)).  Higher
#: orders stay on the plain O(h^2) stencil: the extrapolation only amplifies
#: rounding there.
_RICHARDSON_ORDERS = (1, 2)


def _stencil_eval(position: Callable[[float], np.ndarray], s: float,
                  order: int, h: float) -> np.ndarray:
    offsets, weights, power = _STENCILS[order]
    acc = weights[0] * np.asarray(position(s + offsets[0] * h), dtype=float)
    for off, wgt in zip(offsets[1:], weights[1:]):
        acc = acc + wgt * np.asarray(position(s + off * h), dtype=float)
    return acc / h**power


def fd_derivative(position: Callable[[float], np.ndarray], s: float,
                  order: int, h: float | None = None,
                  domain: tuple[float, float] | None = None) -> np.ndarray:
    """Finite-difference derivative of a curve position function.

    Central stencils; orders 1-2 additionally get one Richardson
    extrapolation step (error O(h^4) for smooth inputs), orders 3-5 are plain
    central differences (error O(h^2)).

    Raises DomainExceeded when the stencil would leave ``domain``.
    """
    if not 1 <= order <= MAX_ORDER:
        raise ValueError(f"order must be 1..{MAX_ORDER}, got {order}")
    if h is None:
        h = default_step(order, scale=s)
    if h <= 0:
        raise ValueError("h must be > 0")
    offsets, _, _ = _STENCILS[order]
    reach = max(abs(o) for o in offsets) * h
    if domain is not None and (s - reach < domain[0] or s + reach > domain[1]):
        raise DomainExceeded(
            f"stencil [{s - reach}, {s + reach}] leaves domain {domain}")
    if order in _RICHARDSON_ORDERS:
        coarse = _stencil_eval(position, s, order, h)
        fine = _stencil_eval(position, s, order, 0.5 * h)
        return (4.0 * fine - coarse) / 3.0
    return _stencil_eval(position, s, order, h)


@dataclass(frozen=True)
class CurveDefinition:
    """A parametric curve s -> R^4 with derivatives up to order 5.

    ``evaluator(s, order)`` returns the order-th derivative (order 0 is the
    position) as a length-4 array; it is only called with orders up to
    ``max_analytic_order``, beyond which a finite-difference fallback on the
    position runs.  ``exclusions`` lists open bands removed from the domain
    (involute cusp neighborhoods).  Instances are immutable; evaluation is
    pure and thread-safe.
    """

    s_min: float
    s_max: float
    evaluator: Callable[[float, int], np.ndarray]
    provenance: str
    max_analytic_order: int = MAX_ORDER
    exclusions: tuple[tuple[float, float], ...] = field(default=())

    @property
    def domain(self) -> tuple[float, float]:
        return (self.s_min, self.s_max)

    @property
    def domain_length(self) -> float:
        return self.s_max - self.s_min

    def contains(self, s: float) -> bool:
        if not self.s_min <= s <= self.s_max:
            return False
        return not any(lo < s < hi for lo, hi in self.exclusions)

    def _check(self, s: float) -> None:
        if not self.s_min <= s <= self.s_max:
            raise DomainExceeded(
                f"s={s} outside [{self.s_min}, {self.s_max}]")
        for lo, hi in self.exclusions:
            if lo < s < hi:
                raise DomainExceeded(f"s={s} inside excluded band ({lo}, {hi})")

    def eval(self, s: float, order: int = 0) -> np.ndarray:
        """Position (order 0) or derivative (orders 1..5) at s."""
        if not 0 <= order <= MAX_ORDER:
            raise ValueError(f"order must be 0..{MAX_ORDER}, got {order}")
        self._check(s)
        if order <= self.max_analytic_order:
            return np.asarray(self.evaluator(s, order), dtype=float)
        return fd_derivative(lambda t: self.evaluator(t, 0), s, order,
                             domain=self.domain)

    def grid(self, start: float | None = None, stop: float | None = None,
             n: int = 512) -> np.ndarray:
        """Uniform n-point grid on [start, stop] minus excluded bands."""
        lo = self.s_min if start is None else start
        hi = self.s_max if stop is None else stop
        pts = np.linspace(lo, hi, n) if n > 1 else np.array([lo])
        keep = np.ones(len(pts), dtype=bool)
        for a, b in self.exclusions:
            keep &= ~((pts > a) & (pts < b))
        out = pts[keep]
        if len(out) == 0:
            raise EmptyDomain("all grid points fall in excluded bands")
        return out


def _require_fields(spec: dict, required: set[str]) -> None:
    given = set(spec) - {"type"}
    unknown = given - required
    if unknown:
        raise SpecInvalid(f"unknown fields for {spec.get('type')}: {sorted(unknown)}")
    missing = required - given
    if missing:
        raise SpecInvalid(f"missing fields for {spec.get('type')}: {sorted(missing)}")


def _paper_example_evaluator(s: float, order: int) -> np.ndarray:
    half = 0.5
    if order == 0:
        ch, sh = math.cos(half * s), math.sin(half * s)
        return np.array([ch - sh, ch + sh, half * s, half * s])
    phase = half * s + order * math.pi / 2.0
    amp = half**order
    ch, sh = amp * math.cos(phase), amp * math.sin(phase)
    out = np.array([ch - sh, ch + sh, 0.0, 0.0])
    if order == 1:
        out[2] = half
        out[3] = half
    return out


def _circular4_evaluator(A: float, omega: float, B: float, C: float):
    def evaluate(s: float, order: int) -> np.ndarray:
        phase = omega * s + order * math.pi / 2.0
        amp = A * omega**order
        out = np.array([amp * math.cos(phase), amp * math.sin(phase), 0.0, 0.0])
        if order == 0:
            out[2] = B * s
            out[3] = C * s
        elif order == 1:
            out[2] = B
            out[3] = C
        return out
    return evaluate


def _double_helix_evaluator(a: float, p: float, b: float, q: float):
    def evaluate(s: float, order: int) -> np.ndarray:
        ph_p = p * s + order * math.pi / 2.0
        ph_q = q * s + order * math.pi / 2.0
        amp_p = a * p**order
        amp_q = b * q**order
        return np.array([amp_p * math.cos(ph_p), amp_p * math.sin(ph_p),
                         amp_q * math.cos(ph_q), amp_q * math.sin(ph_q)])
    return evaluate


def _sampled_evaluator(s: np.ndarray, points: np.ndarray):
    spline = CubicSpline(s, points, axis=0)  # not-a-knot
    derivs = [spline] + [spline.derivative(k) for k in range(1, 4)]
    third = derivs[3]

    def evaluate(t: float, order: int) -> np.ndarray:
        if order <= 3:
            return np.asarray(derivs[order](t), dtype=float)
        # Orders 4-5: finite differences of the spline's third derivative.
        return fd_derivative(lambda u: np.asarray(third(u), dtype=float),
                             t, order - 3, domain=(s[0], s[-1]))
    return evaluate


def build_curve(spec: dict) -> CurveDefinition:
    """Build a CurveDefinition from a curve specification mapping.

    Accepted forms (see module docstring for the families):
    {"type": "paper_example"},
    {"type": "circular4", "A":..., "omega":..., "B":..., "C":...},
    {"type": "double_helix", "a":..., "p":..., "b":..., "q":...},
    {"type": "samples", "s": [...], "points": [[x1,x2,x3,x4], ...]}.
    Unknown fields are rejected.
    """
    if not isinstance(spec, dict) or "type" not in spec:
        raise SpecInvalid("curve spec must be a mapping with a 'type' field")
    kind = spec["type"]

    if kind == "paper_example":
        _require_fields(spec, set())
        return CurveDefinition(*DEFAULT_DOMAIN, _paper_example_evaluator,
                               provenance="analytic")

    if kind == "circular4":
        _require_fields(spec, {"A", "omega", "B", "C"})
        vals = {k: float(spec[k]) for k in ("A", "omega", "B", "C")}
        if not all(math.isfinite(v) for v in vals.values()):
            raise SpecInvalid("circular4 parameters must be finite")
        return CurveDefinition(
            *DEFAULT_DOMAIN,
            _circular4_evaluator(vals["A"], vals["omega"], vals["B"], vals["C"]),
            provenance="analytic")

    if kind == "double_helix":
        _require_fields(spec, {"a", "p", "b", "q"})
        vals = {k: float(spec[k]) for k in ("a", "p", "b", "q")}
        if not all(math.isfinite(v) for v in vals.values()):
            raise SpecInvalid("double_helix parameters must be finite")
        return CurveDefinition(
            *DEFAULT_DOMAIN,
            _double_helix_evaluator(vals["a"], vals["p"], vals["b"], vals["q"]),
            provenance="analytic")

    if kind == "samples":
        _require_fields(spec, {"s", "points"})
        s = np.asarray(spec["s"], dtype=float)
        points = np.asarray(spec["points"], dtype=float)
        if s.ndim != 1 or len(s) < 11:
            raise SpecInvalid("samples require at least 11 parameter values")
        if np.any(np.diff(s) <= 0):
            raise SpecInvalid("sample parameters must be strictly increasing")
        if points.shape != (len(s), 4):
            raise SpecInvalid(
                f"points must have shape ({len(s)}, 4), got {points.shape}")
        if not (np.all(np.isfinite(s)) and np.all(np.isfinite(points))):
            raise SpecInvalid("samples must be finite")
        return CurveDefinition(float(s[0]), float(s[-1]),
                               _sampled_evaluator(s, points),
                               provenance="sampled", max_analytic_order=3)

    raise SpecInvalid(f"unknown curve type {kind!r}")


def is_unit_speed(curve: CurveDefinition, grid, tol: float) -> tuple[bool, float]:
    """Whether |curve'(s)| = 1 on the grid; also the max deviation found."""
    worst = 0.0
    for s in np.asarray(grid, dtype=float):
        worst = max(worst, abs(float(np.linalg.norm(curve.eval(s, 1))) - 1.0))
    return worst <= tol, worst
