"""The pointwise quantity Q, its decomposed form and the Claim's bound functions."""

from dataclasses import dataclass

import numpy as np

from src.claim.spectrum import ShapeSpectrum
from src.curvature.ambient import PLANE_PAIRS, AmbientRestriction
from src.curvature.tensor import CurvatureInvariants, CurvatureTensor, invariants
from src.errors import ConstraintError, DimensionError, FrameMismatch

SQRT3 = float(np.sqrt(3.0))


def q_from_invariants(inv: CurvatureInvariants) -> float:
    return inv.scalar**2 / 12.0 - inv.ric_norm_sq / 4.0


def q_direct(induced: CurvatureTensor) -> float:
    """
    Q = S^2/12 - |Ric|^2/4 of a four-dimensional tensor.

    Raises:
        DimensionError: tensor is not four-dimensional
    """
    if induced.dim != 4:
        raise DimensionError(f"Q is defined for dim 4, got {induced.dim}")
    return q_from_invariants(invariants(induced))


def principal_weyl(tensor: CurvatureTensor) -> np.ndarray:
    """The six Weyl components W_ijij, i < j, of a four-dimensional tensor."""
    if tensor.dim != 4:
        raise DimensionError(f"Principal Weyl components need dim 4, got {tensor.dim}")
    weyl = invariants(tensor).weyl
    return np.array([weyl[i, j, i, j] for i, j in PLANE_PAIRS])


def q_decomposed(amb: AmbientRestriction, spec: ShapeSpectrum) -> float:
    """
    Q expanded in ambient and second fundamental form data.

    Evaluates, term by term,
    (1/12)[sigma^2/4 + 6 sigma H^2 + 36 H^4 + |A0|^4 - 3 sum mu^4
    + 6 sum mu_i^2 (a_ii - sigma/3) - 12 H sum mu_i a_ii - 18 H^2 |A0|^2
    + 12 H sum mu^3 - 3 |a0|^2].
    ``q_direct`` of the Gauss-induced tensor is the authoritative value.

    Raises:
        FrameMismatch: ambient and spectrum dimensions differ
    """
    if amb.dim != spec.dim:
        raise FrameMismatch(f"Ambient dim {amb.dim} does not match spectrum dim {spec.dim}")

    h = spec.mean_curvature
    mu = np.asarray(spec.traceless)
    s = spec.a_norm_sq
    sigma = amb.sigma
    a_diag = np.diag(amb.a)

    total = (
        sigma**2 / 4.0
        + 6.0 * sigma * h**2
        + 36.0 * h**4
        + s**2
        - 3.0 * spec.p4
        + 6.0 * float(np.sum(mu**2 * (a_diag - sigma / 3.0)))
        - 12.0 * h * float(np.sum(mu * a_diag))
        - 18.0 * h**2 * s
        + 12.0 * h * spec.p3
        - 3.0 * amb.a_ring_norm_sq
    )
    return total / 12.0


@dataclass(frozen=True)
class ClaimBound:
    """Upper bound 3(1+H^2)^2 + 3|H| f(|H|) and the pieces it is built from."""

    x0: float
    f_of_h: float
    bound: float
    branch: int


def _f_branch(h_abs: float, x: float) -> float:
    return SQRT3 / 3.0 * x**3 - 0.5 * h_abs * x**2


def claim_bound(mean_curvature: float) -> ClaimBound:
    """
    Bound of the pointwise Claim at mean curvature H.

    f(|H|) = f_1/3 with x = sqrt(12 + 24 H^2) when x0 <= sqrt(12 + 24 H^2),
    otherwise f_2/3 with x = x0, where x0 = 3 sqrt(3)|H| + sqrt(3 + 21 H^2).
    """
    h = abs(float(mean_curvature))
    x0 = 3.0 * SQRT3 * h + float(np.sqrt(3.0 + 21.0 * h**2))
    xc = float(np.sqrt(12.0 + 24.0 * h**2))
    if x0 <= xc:
        branch, x = 1, xc
    else:
        branch, x = 2, x0
    f_of_h = _f_branch(h, x) / 3.0
    bound = 3.0 * (1.0 + h**2) ** 2 + 3.0 * h * f_of_h
    return ClaimBound(x0=x0, f_of_h=f_of_h, bound=bound, branch=branch)


def bare_bound(mean_curvature: float) -> float:
    """3(1+H^2)^2, the bound without the |H| f(|H|) correction."""
    return 3.0 * (1.0 + float(mean_curvature) ** 2) ** 2


@dataclass(frozen=True)
class FProfile:
    value: float
    eta1: float
    eta2: float

    def factorized(self, a_norm: float) -> float:
        return -(a_norm**2 / 24.0) * (a_norm - self.eta1) * (a_norm - self.eta2)


def f_profile(a_norm: float, mean_curvature: float) -> FProfile:
    """
    F(|A0|) = (1/12)(-|A0|^4/2 + 4 sqrt(3)|H||A0|^3 + 3(1 - 2H^2)|A0|^2).

    eta1, eta2 = 4 sqrt(3)|H| -/+ sqrt(6 + 36 H^2) are its non-zero roots.
    """
    if a_norm < 0:
        raise ConstraintError("a_norm must be non-negative")
    h = abs(float(mean_curvature))
    x = float(a_norm)
    value = (-0.5 * x**4 + 4.0 * SQRT3 * h * x**3 + 3.0 * (1.0 - 2.0 * h**2) * x**2) / 12.0
    root = float(np.sqrt(6.0 + 36.0 * h**2))
    return FProfile(value=value, eta1=4.0 * SQRT3 * h - root, eta2=4.0 * SQRT3 * h + root)
