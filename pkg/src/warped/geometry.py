"""Curvature of the rotationally symmetric ambient R x_phi S^4."""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from src.claim.spectrum import ShapeSpectrum, principal_order, shape_spectrum
from src.curvature.ambient import AmbientRestriction
from src.curvature.tensor import CurvatureTensor, constant_curvature, kulkarni_nomizu
from src.errors import ConstraintError, DomainError
from src.warped.presets import WarpedPreset

NORM_TOL = 1e-12
# Rounding slack for kappa values computed from phi, e.g. (1 - cos^2 t) / sin^2 t
KAPPA_TOL = 1e-10


@dataclass(frozen=True)
class KappaPair:
    """Sectional curvatures of mixed (kappa1) and fiber (kappa2) planes."""

    kappa1: float
    kappa2: float

    @property
    def admissible_for_rotsym(self) -> bool:
        return -KAPPA_TOL <= self.kappa1 <= self.kappa2 + KAPPA_TOL and self.kappa2 <= 1.0 + KAPPA_TOL

    @property
    def delta(self) -> float:
        return self.kappa1 - self.kappa2


@dataclass(frozen=True)
class TangentProjection:
    """Tangential part of the unit vector d/dt in the principal frame."""

    components: Tuple[float, ...]

    def __post_init__(self) -> None:
        comps = tuple(float(x) for x in self.components)
        if len(comps) != 4:
            raise ConstraintError(f"T needs 4 components, got {len(comps)}")
        if sum(x * x for x in comps) > 1.0 + NORM_TOL:
            raise ConstraintError("|T|^2 must not exceed 1")
        object.__setattr__(self, "components", comps)

    @classmethod
    def zero(cls) -> "TangentProjection":
        return cls((0.0, 0.0, 0.0, 0.0))

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.components)

    @property
    def norm_sq(self) -> float:
        return float(self.vector @ self.vector)

    def permuted(self, order: Sequence[int]) -> "TangentProjection":
        return TangentProjection(tuple(self.vector[np.asarray(order)]))


def kappa(preset: WarpedPreset, t: float) -> KappaPair:
    """
    kappa1 = -phi''/phi and kappa2 = (1 - phi'^2)/phi^2 at t.

    Raises:
        DomainError: t outside the preset's domain or phi(t) <= 0
    """
    if not preset.contains(t):
        raise DomainError(f"t={t} outside domain {preset.domain} of preset {preset.name}")
    phi = preset.phi(t)
    if phi <= 0:
        raise DomainError(f"phi({t}) = {phi} is not positive")
    phi_dot = preset.phi_dot(t)
    return KappaPair(
        kappa1=-preset.phi_ddot(t) / phi,
        kappa2=(1.0 - phi_dot**2) / phi**2,
    )


def warped_ambient(k: KappaPair, tangent: TangentProjection) -> AmbientRestriction:
    """
    Tangential ambient curvature of the warped product.

    Rbar = kappa2 (g o g)/2 + (kappa1 - kappa2) (T T^T o g).
    """
    t = tangent.vector
    comp = constant_curvature(4, k.kappa2).comp + k.delta * kulkarni_nomizu(np.outer(t, t), np.eye(4))
    return AmbientRestriction.from_tensor(CurvatureTensor(4, comp))


def warped_closed_forms(k: KappaPair, tangent: TangentProjection) -> Tuple[float, np.ndarray, float]:
    """(sigma, diag(a), |a0|^2) in closed form, for cross-checking ``warped_ambient``."""
    t = tangent.vector
    tau = tangent.norm_sq
    sigma = 12.0 * k.kappa2 + 6.0 * k.delta * tau
    a_diag = 3.0 * k.kappa2 + k.delta * (2.0 * t**2 + tau)
    return sigma, a_diag, 3.0 * k.delta**2 * tau**2


def pattern_traceless(m: float, position: int = 4) -> np.ndarray:
    """(m, m, m, -3m) with the exceptional value at 1-based ``position``."""
    if not 1 <= position <= 4:
        raise ConstraintError(f"position must be in 1..4, got {position}")
    mu = np.full(4, float(m))
    mu[position - 1] = -3.0 * m
    return mu


def pattern_order(m: float, mean_curvature: float, position: int = 4) -> np.ndarray:
    """Permutation taking the pattern's frame to the descending principal frame."""
    return principal_order(pattern_traceless(m, position) + mean_curvature)


def pattern_point(
    k: KappaPair, tangent: TangentProjection, m: float, mean_curvature: float, position: int = 4
) -> Tuple[AmbientRestriction, ShapeSpectrum]:
    """
    Conformally flat point over the warped ambient.

    Principal curvatures are (m, m, m, -3m) + H placed by ``position``;
    T is given in that frame and is carried into the descending frame of
    the returned spectrum.
    """
    lam = pattern_traceless(m, position) + mean_curvature
    spec = shape_spectrum(lam)
    order = pattern_order(m, mean_curvature, position)
    return warped_ambient(k, tangent.permuted(order)), spec
