"""Exception hierarchy for the quatcurve package."""


class QuatCurveError(Exception):
    """Base class for all quatcurve errors."""


class SpecInvalid(QuatCurveError):
    """A curve specification is malformed or violates a family constraint."""


class DomainExceeded(QuatCurveError):
    """An evaluation point (or finite-difference stencil) left the curve domain."""


class CurveSingular(QuatCurveError):
    """The curve has (numerically) vanishing speed at the requested parameter."""


class FrameUndefined(QuatCurveError):
    """A Frenet frame vector has a vanishing normalizing denominator.

    ``which`` names the first frame vector that could not be constructed
    ("N" or "E").
    """

    def __init__(self, which: str, message: str = ""):
        self.which = which
        super().__init__(message or f"frame vector {which} undefined")


class NotUnitSpeed(QuatCurveError):
    """An operation requiring an arc-length parametrized curve got a non-unit-speed one."""


class EmptyDomain(QuatCurveError):
    """A domain restriction (singularity exclusion) removed the entire interval."""


class InvoluteSingular(QuatCurveError):
    """Evaluation requested inside the excluded band around the involute cusp."""


class HigherFrameIndeterminate(QuatCurveError):
    """The closed-form involute frame is 0/0-indeterminate (vanishing radicand).

    Carries whatever scalar quantities were still well defined: ``kappa``
    (first curvature of the involute) and ``k_star`` (its numerically
    vanishing second curvature).
    """

    def __init__(self, message: str = "", kappa: float | None = None,
                 k_star: float | None = None):
        self.kappa = kappa
        self.k_star = k_star
        super().__init__(message or "higher frame vectors indeterminate (vanishing radicand)")


class NotSpatial(QuatCurveError):
    """A recovered 3-space frame vector has a non-negligible scalar part."""


class CurvatureZero(QuatCurveError):
    """A curvature that must be positive (for a radius or quotient) vanished."""


class DenominatorZero(QuatCurveError):
    """A closed-form quotient has a (numerically) vanishing denominator."""
