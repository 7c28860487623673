"""Real quaternion algebra on R^4.

Conventions
-----------
A quaternion q = d + a*e1 + b*e2 + c*e3 has scalar part d (the e4 = +1
component) and vector part (a, b, c).  Identified with a point of R^4 it
is laid out as the 4-vector (a, b, c, d): basis order e1, e2, e3, e4,
scalar component LAST.  This matches the coordinate order used by the
curve families and the CSV exports (columns x1..x4).

The symmetric bilinear form ``hform`` equals the Euclidean dot product of
the 4-tuples; it is evaluated through the conjugated product
(p x conj(q) + q x conj(p)) / 2, whose vector part cancels identically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: Default absolute tolerance for comparisons of unit-scale quantities.
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Quaternion:
    """Real quaternion d + a*e1 + b*e2 + c*e3."""

    d: float
    a: float
    b: float
    c: float

    @property
    def scalar(self) -> float:
        return self.d

    @property
    def vector(self) -> np.ndarray:
        """Vector part (a, b, c) as an array."""
        return np.array([self.a, self.b, self.c])

    def to_vec4(self) -> np.ndarray:
        """R^4 coordinates (a, b, c, d) -- scalar component last."""
        return np.array([self.a, self.b, self.c, self.d])

    @classmethod
    def from_vec4(cls, v) -> "Quaternion":
        v = np.asarray(v, dtype=float)
        return cls(d=float(v[3]), a=float(v[0]), b=float(v[1]), c=float(v[2]))

    @classmethod
    def from_scalar_vector(cls, scalar: float, vector) -> "Quaternion":
        vector = np.asarray(vector, dtype=float)
        return cls(d=float(scalar), a=float(vector[0]), b=float(vector[1]),
                   c=float(vector[2]))

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        return qmul(self, other)

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.d + other.d, self.a + other.a,
                          self.b + other.b, self.c + other.c)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.d - other.d, self.a - other.a,
                          self.b - other.b, self.c - other.c)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.d, -self.a, -self.b, -self.c)

    def scaled(self, x: float) -> "Quaternion":
        return Quaternion(x * self.d, x * self.a, x * self.b, x * self.c)


E1 = Quaternion(0.0, 1.0, 0.0, 0.0)
E2 = Quaternion(0.0, 0.0, 1.0, 0.0)
E3 = Quaternion(0.0, 0.0, 0.0, 1.0)
E4 = Quaternion(1.0, 0.0, 0.0, 0.0)  # the multiplicative identity


def qmul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Quaternion product p x q.

    Expands through scalar/vector parts:
    S_p S_q - <V_p, V_q>  +  S_p V_q + S_q V_p + V_p ^ V_q.
    """
    pv, qv = p.vector, q.vector
    scalar = p.d * q.d - float(np.dot(pv, qv))
    vector = p.d * qv + q.d * pv + np.cross(pv, qv)
    return Quaternion.from_scalar_vector(scalar, vector)


def conjugate(q: Quaternion) -> Quaternion:
    """Conjugate: scalar part kept, vector part negated."""
    return Quaternion(q.d, -q.a, -q.b, -q.c)


def hform(p: Quaternion, q: Quaternion) -> float:
    """Symmetric bilinear form; equals the Euclidean dot product of 4-tuples.

    Evaluated as the scalar part of (p x conj(q) + q x conj(p)) / 2.  The
    vector parts of the two summands cancel exactly, so only the scalar
    survives.
    """
    left = qmul(p, conjugate(q))
    right = qmul(q, conjugate(p))
    return 0.5 * (left.d + right.d)


def qnorm(q: Quaternion) -> float:
    """Norm sqrt(hform(q, q)) >= 0."""
    return float(np.sqrt(hform(q, q)))


def is_spatial(q: Quaternion, tol: float = DEFAULT_TOL) -> bool:
    """True iff the scalar part vanishes within tol (q + conj(q) = 0)."""
    if tol < 0:
        raise ValueError("tol must be >= 0")
    return abs(q.d) <= tol


def is_temporal(q: Quaternion, tol: float = DEFAULT_TOL) -> bool:
    """True iff the vector part vanishes within tol (q - conj(q) = 0)."""
    if tol < 0:
        raise ValueError("tol must be >= 0")
    return bool(np.all(np.abs(q.vector) <= tol))


def qmul_vec4(u, v) -> np.ndarray:
    """Quaternion product on R^4 coordinates (a, b, c, d), scalar last."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    scalar = u[3] * v[3] - float(np.dot(u[:3], v[:3]))
    vector = u[3] * v[:3] + v[3] * u[:3] + np.cross(u[:3], v[:3])
    return np.array([vector[0], vector[1], vector[2], scalar])


def conjugate_vec4(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    return np.array([-v[0], -v[1], -v[2], v[3]])


def cross4(a, b, c) -> np.ndarray:
    """Ternary wedge of three 4-vectors.

    Returns w with <w, v> = det(rows: v, a, b, c) for every v (cofactor
    expansion along the basis row placed first), so cross4(e2, e3, e4) = +e1.
    Trilinear and alternating; w is orthogonal to a, b and c, and |w| is the
    3-volume of the parallelepiped they span.  Linearly dependent inputs give
    the zero vector.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    c = np.asarray(c, dtype=float)

    def minor(i: int, j: int, k: int) -> float:
        return (a[i] * (b[j] * c[k] - b[k] * c[j])
                - a[j] * (b[i] * c[k] - b[k] * c[i])
                + a[k] * (b[i] * c[j] - b[j] * c[i]))

    return np.array([
        minor(1, 2, 3),
        -minor(0, 2, 3),
        minor(0, 1, 3),
        -minor(0, 1, 2),
    ])
