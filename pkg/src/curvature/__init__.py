"""Curvature tensor algebra: invariants, sectional curvature and the Gauss equation."""

from .ambient import PLANE_PAIRS, AmbientRestriction, gauss_induced
from .generators import random_admissible_ambient, random_algebraic_tensor
from .shape import ShapeOperator
from .tensor import (
    CurvatureInvariants,
    CurvatureTensor,
    constant_curvature,
    invariants,
    kulkarni_nomizu,
    make_curvature_tensor,
    sectional,
    sectional_range,
    sectional_tensor,
)

__all__ = [
    "PLANE_PAIRS",
    "AmbientRestriction",
    "gauss_induced",
    "random_admissible_ambient",
    "random_algebraic_tensor",
    "ShapeOperator",
    "CurvatureInvariants",
    "CurvatureTensor",
    "constant_curvature",
    "invariants",
    "kulkarni_nomizu",
    "make_curvature_tensor",
    "sectional",
    "sectional_range",
    "sectional_tensor",
]
