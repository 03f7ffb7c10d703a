"""Principal curvature spectra of a hypersurface point."""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from src.curvature.shape import ShapeOperator
from src.errors import ShapeError


@dataclass(frozen=True)
class ShapeSpectrum:
    """
    Mean curvature, principal curvatures and traceless eigenvalues.

    ``principal`` and ``traceless`` are sorted descending and share a frame:
    traceless[i] = principal[i] - mean_curvature.
    """

    mean_curvature: float
    principal: Tuple[float, ...]
    traceless: Tuple[float, ...]
    a_norm_sq: float
    p3: float
    p4: float
    gauss_kronecker: float

    @property
    def dim(self) -> int:
        return len(self.principal)

    @property
    def a_norm(self) -> float:
        return float(np.sqrt(self.a_norm_sq))

    def shape_operator(self) -> ShapeOperator:
        return ShapeOperator(self.dim, self.principal)

    def to_dict(self) -> dict:
        return {
            "H": self.mean_curvature,
            "lambda": list(self.principal),
            "mu": list(self.traceless),
            "a_norm_sq": self.a_norm_sq,
            "p3": self.p3,
            "p4": self.p4,
            "gk": self.gauss_kronecker,
        }


def principal_order(values: Sequence[float]) -> np.ndarray:
    """Stable permutation sorting values descending."""
    return np.argsort(-np.asarray(values, dtype=float), kind="stable")


def shape_spectrum(principal: Sequence[float]) -> ShapeSpectrum:
    """
    Build the spectrum of a shape operator from its principal curvatures.

    Args:
        principal: Principal curvatures in any order

    Returns:
        Spectrum with descending principal and traceless eigenvalues
    """
    lam = np.asarray(principal, dtype=float)
    if lam.ndim != 1 or lam.size == 0:
        raise ShapeError("Principal curvatures must be a non-empty sequence")
    if not np.all(np.isfinite(lam)):
        raise ShapeError("Principal curvatures must be finite")

    lam = lam[principal_order(lam)]
    mean = float(np.mean(lam))
    mu = lam - mean
    return ShapeSpectrum(
        mean_curvature=mean,
        principal=tuple(float(x) for x in lam),
        traceless=tuple(float(x) for x in mu),
        a_norm_sq=float(np.sum(mu**2)),
        p3=float(np.sum(mu**3)),
        p4=float(np.sum(mu**4)),
        gauss_kronecker=float(np.prod(mu)),
    )


def flip_orientation(spec: ShapeSpectrum) -> ShapeSpectrum:
    """Spectrum for the opposite unit normal: (H, mu) -> (-H, -mu)."""
    return shape_spectrum([-x for x in spec.principal])
