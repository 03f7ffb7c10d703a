"""Margin of the Claim at a single admissible, locally conformally flat point."""

import logging
from dataclasses import dataclass

import numpy as np

from src.claim.cases import CaseLabel, classify_case
from src.claim.quantities import bare_bound, claim_bound, q_from_invariants
from src.claim.spectrum import ShapeSpectrum
from src.curvature.ambient import (
    DEFAULT_RANGE_BUDGET,
    PLANE_PAIRS,
    STRICT_RANGE_TOL,
    AmbientRestriction,
    gauss_induced,
)
from src.curvature.tensor import invariants
from src.errors import NotAdmissible, NotLCF

logger = logging.getLogger(__name__)

DEFAULT_LCF_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class MarginReport:
    """Q, its bound and the witness data of one evaluated point."""

    q: float
    bound: float
    margin: float
    case: CaseLabel
    weyl_norm_sq: float
    principal_weyl_max: float
    spectrum: ShapeSpectrum
    ambient: AmbientRestriction

    @property
    def mean_curvature(self) -> float:
        return self.spectrum.mean_curvature

    def to_dict(self) -> dict:
        """Full witness serialization."""
        return {
            "q": self.q,
            "bound": self.bound,
            "margin": self.margin,
            "case": self.case.value,
            "weyl_norm_sq": self.weyl_norm_sq,
            "principal_weyl_max": self.principal_weyl_max,
            "H": self.mean_curvature,
            "spectrum": self.spectrum.to_dict(),
            "ambient": {
                "sigma": self.ambient.sigma,
                "a": self.ambient.a.tolist(),
                "a_ring_norm_sq": self.ambient.a_ring_norm_sq,
                "coordinate_sectionals": self.ambient.coordinate_sectionals().tolist(),
                "comp": self.ambient.comp.tolist(),
            },
        }


@dataclass(frozen=True, eq=False)
class MarginEvaluation:
    """Ungated evaluation; ``claim_margin`` decides whether it counts."""

    q: float
    bound: float
    weyl_norm_sq: float
    principal_weyl_max: float
    sectional_violation: float

    @property
    def margin(self) -> float:
        return self.q - self.bound


def evaluate_margin(
    amb: AmbientRestriction, spec: ShapeSpectrum, bare: bool = False
) -> MarginEvaluation:
    """Q, bound and hypothesis residuals without enforcing the hypotheses."""
    inv = invariants(gauss_induced(amb, spec.shape_operator()))
    weyl = inv.weyl
    principal = np.array([weyl[i, j, i, j] for i, j in PLANE_PAIRS])
    h = spec.mean_curvature
    return MarginEvaluation(
        q=q_from_invariants(inv),
        bound=bare_bound(h) if bare else claim_bound(h).bound,
        weyl_norm_sq=inv.weyl_norm_sq,
        principal_weyl_max=float(np.max(np.abs(principal))),
        sectional_violation=amb.sectional_violation(),
    )


def claim_margin(
    amb: AmbientRestriction,
    spec: ShapeSpectrum,
    lcf_tol: float = DEFAULT_LCF_TOL,
    strict_lcf: bool = True,
    bare: bool = False,
    strict_admissible: bool = False,
    range_budget: int = DEFAULT_RANGE_BUDGET,
) -> MarginReport:
    """
    Evaluate the Claim at one point.

    Args:
        amb: Ambient restriction in the spectrum's principal frame
        spec: Shape spectrum
        lcf_tol: Tolerance of the conformal flatness gate
        strict_lcf: Gate on |W|^2 when True, on max |W_ijij| otherwise
        bare: Compare against 3(1+H^2)^2 instead of the full bound
        strict_admissible: Also require the sampled sectional range over all
            2-planes to lie in [0, 1]
        range_budget: Number of random planes for the strict check

    Returns:
        MarginReport with margin = q - bound

    Raises:
        NotAdmissible: a coordinate sectional of the ambient leaves [0, 1], or
            with strict_admissible the sampled sectional range does
        NotLCF: the induced metric fails the conformal flatness gate
    """
    if not amb.is_admissible():
        raise NotAdmissible(
            f"Ambient sectionals {np.round(amb.coordinate_sectionals(), 6).tolist()} leave [0, 1]"
        )
    if strict_admissible:
        lo, hi = amb.sectional_range(range_budget)
        if lo < -STRICT_RANGE_TOL or hi > 1.0 + STRICT_RANGE_TOL:
            raise NotAdmissible(f"Ambient sectional range [{lo:.6f}, {hi:.6f}] leaves [0, 1]")

    evaluation = evaluate_margin(amb, spec, bare=bare)
    gate = evaluation.weyl_norm_sq if strict_lcf else evaluation.principal_weyl_max
    if gate > lcf_tol:
        raise NotLCF(f"Weyl residual {gate:.3e} exceeds tolerance {lcf_tol:.0e}")

    return MarginReport(
        q=evaluation.q,
        bound=evaluation.bound,
        margin=evaluation.q - evaluation.bound,
        case=classify_case(amb, spec),
        weyl_norm_sq=evaluation.weyl_norm_sq,
        principal_weyl_max=evaluation.principal_weyl_max,
        spectrum=spec,
        ambient=amb,
    )
