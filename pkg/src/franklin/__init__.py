"""Exact Lebesgue constants for periodic piecewise linear spline projections."""

from .invgram import InverseRow, denominator, g_general, inverse_row
from .lebesgue import GAMMA, NormReport, gamma_compare, kappa, projection_norm
from .recurrences import A, B, QuadraticRational, hyperbolic_sequence, phi
from .splines import KnotConfig, KnotSequence, gram_matrix, special_knots

__all__ = [
    "A",
    "B",
    "GAMMA",
    "InverseRow",
    "KnotConfig",
    "KnotSequence",
    "NormReport",
    "QuadraticRational",
    "denominator",
    "g_general",
    "gamma_compare",
    "gram_matrix",
    "hyperbolic_sequence",
    "inverse_row",
    "kappa",
    "phi",
    "projection_norm",
    "special_knots",
]
