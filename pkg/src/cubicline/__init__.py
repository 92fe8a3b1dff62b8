"""Cubic-line pairs in the projective plane: exact GIT stability, the Hesse
pencil with its 216-element symmetry group, and a chart atlas for the
resolved rational map between the two compactifications."""

from .scalars import BASE, ZETA, FieldTower, Scalar, adjoin_quadratic, parse_scalar
from .forms import CubicLinePair, ProjTransform, TernaryForm
from .stability import OnePS, classify, mu, worst_one_ps

__all__ = ["BASE", "ZETA", "FieldTower", "Scalar", "adjoin_quadratic", "parse_scalar",
           "CubicLinePair", "ProjTransform", "TernaryForm", "OnePS", "classify", "mu",
           "worst_one_ps"]
__version__ = "0.1.0"
