"""The pointwise Claim: Q, its bound, the proof's case split and margins."""

from .cases import (
    CaseLabel,
    classify_case,
    classify_spectrum,
    flip_label,
    normalized_orientation,
    oriented_mean,
)
from .margin import DEFAULT_LCF_TOL, MarginEvaluation, MarginReport, claim_margin, evaluate_margin
from .quantities import (
    ClaimBound,
    FProfile,
    bare_bound,
    claim_bound,
    f_profile,
    principal_weyl,
    q_decomposed,
    q_direct,
)
from .spectrum import ShapeSpectrum, flip_orientation, principal_order, shape_spectrum

__all__ = [
    "CaseLabel",
    "classify_case",
    "classify_spectrum",
    "flip_label",
    "normalized_orientation",
    "oriented_mean",
    "DEFAULT_LCF_TOL",
    "MarginEvaluation",
    "MarginReport",
    "claim_margin",
    "evaluate_margin",
    "ClaimBound",
    "FProfile",
    "bare_bound",
    "claim_bound",
    "f_profile",
    "principal_weyl",
    "q_decomposed",
    "q_direct",
    "ShapeSpectrum",
    "flip_orientation",
    "principal_order",
    "shape_spectrum",
]
