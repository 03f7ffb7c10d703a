"""Case split of the Claim's proof."""

import logging
from enum import Enum
from typing import Tuple

import numpy as np

from src.claim.spectrum import ShapeSpectrum
from src.curvature.ambient import AmbientRestriction
from src.errors import FrameMismatch, UnclassifiableError

logger = logging.getLogger(__name__)

# Relative to the largest principal curvature; smaller |H| counts as zero
MEAN_ZERO_TOL = 1e-12


class CaseLabel(str, Enum):
    """Proof case of a point."""

    I = "I"  # noqa: E741
    IIA = "IIa"
    IIB = "IIb"
    IIC = "IIc"


def umbilicity_threshold(mean_curvature: float) -> float:
    """|A0|^2 above which a point falls in case II."""
    return 12.0 + 24.0 * mean_curvature**2


def oriented_mean(spec: ShapeSpectrum) -> float:
    """H, or 0.0 when H is rounding noise at the scale of the spectrum."""
    h = spec.mean_curvature
    scale = max(1.0, float(np.max(np.abs(spec.principal))))
    return 0.0 if abs(h) <= MEAN_ZERO_TOL * scale else h


def normalized_orientation(spec: ShapeSpectrum) -> Tuple[float, np.ndarray]:
    """(H, mu) with H >= 0, flipping the normal when H < 0; mu sorted descending."""
    h = oriented_mean(spec)
    mu = np.asarray(spec.traceless, dtype=float)
    if h < 0:
        h, mu = -h, np.sort(-mu)[::-1]
    return h, mu


def classify_spectrum(spec: ShapeSpectrum) -> CaseLabel:
    h, mu = normalized_orientation(spec)
    if spec.a_norm_sq <= umbilicity_threshold(h):
        return CaseLabel.I

    # Sign of the Gauss-Kronecker value from the signs of mu, immune to underflow
    gk_sign = float(np.prod(np.sign(mu)))
    if gk_sign >= 0 and mu[1] >= 0 >= mu[2]:
        return CaseLabel.IIA
    if gk_sign < 0 and mu[2] > 0 > mu[3]:
        return CaseLabel.IIB
    if gk_sign < 0 and mu[0] > 0 > mu[1]:
        return CaseLabel.IIC

    logger.error(f"Unclassifiable spectrum H={h}, mu={mu.tolist()}")
    raise UnclassifiableError(f"Spectrum mu={mu.tolist()} fits no case pattern")


def classify_case(amb: AmbientRestriction, spec: ShapeSpectrum) -> CaseLabel:
    """
    Label a point with its proof case.

    Orientation is normalized to H >= 0 first.  The boundary
    |A0|^2 = 12 + 24 H^2 belongs to case I, and a zero mu_i with
    non-negative Gauss-Kronecker value routes to IIa.

    Raises:
        FrameMismatch: ambient and spectrum dimensions differ
    """
    if amb.dim != spec.dim:
        raise FrameMismatch(f"Ambient dim {amb.dim} does not match spectrum dim {spec.dim}")
    return classify_spectrum(spec)


def flip_label(label: CaseLabel, mean_curvature: float) -> CaseLabel:
    """Label of the orientation-flipped point.

    Only H = 0 is left unnormalized, and there a flip swaps IIb and IIc.
    """
    if mean_curvature != 0:
        return label
    swap = {CaseLabel.IIB: CaseLabel.IIC, CaseLabel.IIC: CaseLabel.IIB}
    return swap.get(label, label)
