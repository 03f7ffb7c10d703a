"""Intermediate estimates of the Claim's proof as signed residuals.

Each ``*_gap`` function returns (left side) - (right side) of an inequality
the proof asserts, so a non-positive value means the step holds.  Residual
functions return the difference of two sides of an identity.
"""

from typing import Tuple

import numpy as np

from src.claim.cases import normalized_orientation
from src.claim.quantities import SQRT3, claim_bound, f_profile
from src.claim.spectrum import ShapeSpectrum
from src.curvature.ambient import AmbientRestriction


def eq_r_excess(amb: AmbientRestriction) -> float:
    """max_i (a_ii - sigma/3) - 1; non-positive for admissible ambients."""
    return float(np.max(np.diag(amb.a) - amb.sigma / 3.0) - 1.0)


def ha_gap(amb: AmbientRestriction, spec: ShapeSpectrum) -> float:
    """-12 H sum mu_i a_ii - 3|a0|^2 - 12 H^2 |A0|^2."""
    h = spec.mean_curvature
    mu = np.asarray(spec.traceless)
    return float(
        -12.0 * h * np.sum(mu * np.diag(amb.a))
        - 3.0 * amb.a_ring_norm_sq
        - 12.0 * h**2 * spec.a_norm_sq
    )


def r1_gap(amb: AmbientRestriction, spec: ShapeSpectrum) -> float:
    """3 sum mu_i^2 (a_ii - sigma/3) - (3/2)|A0|^2, for mu_1 > 0 > mu_2."""
    mu = np.asarray(spec.traceless)
    return float(3.0 * np.sum(mu**2 * (np.diag(amb.a) - amb.sigma / 3.0)) - 1.5 * spec.a_norm_sq)


def mu3_bound_gap(spec: ShapeSpectrum) -> float:
    """sum mu^3 - |A0|^3 / sqrt(3)."""
    return spec.p3 - spec.a_norm_sq**1.5 / SQRT3


def lambda_identity_residual(spec: ShapeSpectrum) -> float:
    """sum mu^4 - (|A0|^4 / 2 - 4 K)."""
    return spec.p4 - (0.5 * spec.a_norm_sq**2 - 4.0 * spec.gauss_kronecker)


def power_sum_residuals(spec: ShapeSpectrum) -> Tuple[float, float]:
    """Residuals of the fourth and third power sums under lambda = mu + H."""
    h = spec.mean_curvature
    lam = np.asarray(spec.principal)
    s = spec.a_norm_sq
    lam3 = float(np.sum(lam**3))
    lam4 = float(np.sum(lam**4))
    fourth = lam4 - (spec.p4 - 12.0 * h**4 - 6.0 * h**2 * s + 4.0 * h * lam3)
    third = lam3 - (spec.p3 + 4.0 * h**3 + 3.0 * h * s)
    return fourth, third


def q1_bound(spec: ShapeSpectrum) -> float:
    """3(1+H^2)^2 + (1/12)(-|A0|^4/2 + 12 H sum mu^3 + 6(1-H^2)|A0|^2 + 12 K)."""
    h = spec.mean_curvature
    s = spec.a_norm_sq
    return 3.0 * (1.0 + h**2) ** 2 + (
        -0.5 * s**2 + 12.0 * h * spec.p3 + 6.0 * (1.0 - h**2) * s + 12.0 * spec.gauss_kronecker
    ) / 12.0


def q2_bound(spec: ShapeSpectrum) -> float:
    """Bound for case IIb: 3(1+H^2)^2 - |A0|^2 (|A0|^2 - 12(1-H^2)) / 24."""
    h = spec.mean_curvature
    s = spec.a_norm_sq
    return 3.0 * (1.0 + h**2) ** 2 - s * (s - 12.0 * (1.0 - h**2)) / 24.0


def q3_bound(spec: ShapeSpectrum) -> float:
    """Bound for case IIc: 3(1+H^2)^2 + F(|A0|)."""
    h, _ = normalized_orientation(spec)
    return 3.0 * (1.0 + h**2) ** 2 + f_profile(spec.a_norm, h).value


def f_dominance_gap(spec: ShapeSpectrum) -> float:
    """F(|A0|) - 3|H| f(|H|); non-positive whenever |A0|^2 >= 12 + 24 H^2."""
    h = abs(spec.mean_curvature)
    return f_profile(spec.a_norm, h).value - 3.0 * h * claim_bound(h).f_of_h
