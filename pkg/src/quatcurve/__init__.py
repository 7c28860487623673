"""Quaternion-valued Serret-Frenet frames and involute/evolute pairs in 4-space."""

from .curves import CurveDefinition, build_curve, fd_derivative, is_unit_speed
from .errors import (CurvatureZero, CurveSingular, DenominatorZero,
                     DomainExceeded, EmptyDomain, FrameUndefined,
                     HigherFrameIndeterminate, InvoluteSingular, NotSpatial,
                     NotUnitSpeed, QuatCurveError, SpecInvalid)
from .frenet import (ApparatusSeries, FrenetFrame4, frenet_apparatus,
                     sample_apparatus, serret_frenet_residual, tangent_normal)
from .involute import (EvoluteApparatus, InvoluteParams,
                       PredictedInvoluteApparatus,
                       check_involute_definition, evolute_apparatus_from_involute,
                       evolute_position_from_involute, involute_curve,
                       predicted_involute_apparatus, predicted_involute_curvatures,
                       wcurve_involute_frame)
from .quaternions import (Quaternion, conjugate, cross4, hform, is_spatial,
                          is_temporal, qmul, qnorm)
from .spatial import (SpatialFrame, SpatialPairReport, associated_spatial_curve,
                      discrete_curvature, discrete_torsion, rigid_align,
                      spatial_frame, spatial_pair_check, spatial_tangent)

__version__ = "0.1.0"

__all__ = [
    "ApparatusSeries", "CurvatureZero", "CurveDefinition", "CurveSingular",
    "DenominatorZero", "DomainExceeded", "EmptyDomain", "EvoluteApparatus",
    "FrameUndefined", "FrenetFrame4", "HigherFrameIndeterminate",
    "InvoluteParams", "InvoluteSingular", "NotSpatial", "NotUnitSpeed",
    "PredictedInvoluteApparatus", "QuatCurveError", "Quaternion",
    "SpatialFrame", "SpatialPairReport", "SpecInvalid",
    "associated_spatial_curve", "build_curve", "check_involute_definition",
    "conjugate", "cross4", "discrete_curvature", "discrete_torsion",
    "evolute_apparatus_from_involute", "evolute_position_from_involute",
    "fd_derivative", "frenet_apparatus", "hform", "involute_curve",
    "is_spatial", "is_temporal", "is_unit_speed",
    "predicted_involute_apparatus", "predicted_involute_curvatures", "qmul",
    "qnorm", "rigid_align", "sample_apparatus", "serret_frenet_residual",
    "spatial_frame", "spatial_pair_check", "spatial_tangent",
    "wcurve_involute_frame",
]
