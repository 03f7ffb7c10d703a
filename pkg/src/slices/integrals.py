"""Level-set slices of R x_phi S^4 and their Gauss-Bonnet-Chern integrals.

A slice {t = c} is a round sphere: umbilic with H = phi'/phi, constant
intrinsic curvature 1/phi^2 and volume Vol(S^4) phi^4, so its integrals are
analytic.  The Monte Carlo path samples S^4 uniformly and exists to exercise
an integrator that does not rely on a constant integrand.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from src.claim.quantities import q_from_invariants
from src.curvature.ambient import gauss_induced
from src.curvature.shape import ShapeOperator
from src.curvature.tensor import CurvatureTensor, invariants
from src.errors import ConstraintError, DimensionError
from src.utils.rng import run_rng
from src.warped.geometry import TangentProjection, kappa, warped_ambient
from src.warped.presets import WarpedPreset

logger = logging.getLogger(__name__)

VOL_S4 = 8.0 * np.pi**2 / 3.0
FOUR_PI_SQ = 4.0 * np.pi**2
SLICE_TOL = 1e-9
INTEGER_TOL = 1e-9
MC_SIGMAS = 3.0


@dataclass(frozen=True, eq=False)
class SliceGeometry:
    preset: WarpedPreset
    t: float
    phi: float
    phi_dot: float
    mean_curvature: float
    intrinsic_sec: float
    volume: float
    induced: CurvatureTensor

    def to_dict(self) -> dict:
        return {
            "preset": self.preset.name,
            "t": self.t,
            "phi": self.phi,
            "phi_dot": self.phi_dot,
            "H": self.mean_curvature,
            "intrinsic_sec": self.intrinsic_sec,
            "volume": self.volume,
        }


@dataclass(frozen=True)
class IntegralReport:
    gbc_integral: float
    euler_number: float
    volume_functional: float
    rhs: float
    slack: float
    method: str = "analytic"
    mc_estimate: Optional[float] = None
    mc_stderr: Optional[float] = None
    mc_samples: Optional[int] = None

    @property
    def mc_agrees(self) -> Optional[bool]:
        if self.mc_estimate is None:
            return None
        allowed = max(MC_SIGMAS * (self.mc_stderr or 0.0), SLICE_TOL * abs(self.gbc_integral))
        return abs(self.mc_estimate - self.gbc_integral) <= allowed

    def to_dict(self) -> dict:
        return {
            "gbc_integral": self.gbc_integral,
            "euler_number": self.euler_number,
            "volume_functional": self.volume_functional,
            "rhs": self.rhs,
            "slack": self.slack,
            "method": self.method,
            "mc_estimate": self.mc_estimate,
            "mc_stderr": self.mc_stderr,
            "mc_samples": self.mc_samples,
            "mc_agrees": self.mc_agrees,
        }


def slice_hypersurface(preset: WarpedPreset, t: float) -> SliceGeometry:
    """
    The slice {t} with its induced curvature from the Gauss equation.

    Raises:
        DomainError: t outside the preset's domain or phi(t) <= 0
        ConstraintError: the Gauss equation disagrees with 1/phi^2
    """
    k = kappa(preset, t)
    phi = preset.phi(t)
    phi_dot = preset.phi_dot(t)
    h = phi_dot / phi

    induced = gauss_induced(warped_ambient(k, TangentProjection.zero()), ShapeOperator(4, (h,) * 4))
    intrinsic = 1.0 / phi**2
    gauss_value = k.kappa2 + h**2
    if abs(induced.comp[0, 1, 0, 1] - intrinsic) > SLICE_TOL * max(1.0, intrinsic) or abs(
        gauss_value - intrinsic
    ) > SLICE_TOL * max(1.0, intrinsic):
        raise ConstraintError(
            f"Slice at t={t}: sectional {induced.comp[0, 1, 0, 1]!r} vs 1/phi^2 = {intrinsic!r}"
        )

    return SliceGeometry(
        preset=preset,
        t=float(t),
        phi=phi,
        phi_dot=phi_dot,
        mean_curvature=h,
        intrinsic_sec=intrinsic,
        volume=VOL_S4 * phi**4,
        induced=induced,
    )


def gbc_integrand(tensor: CurvatureTensor) -> float:
    """
    S^2/12 - |Ric|^2/4 + |W|^2/8 of a four-dimensional tensor.

    Raises:
        DimensionError: tensor is not four-dimensional
    """
    if tensor.dim != 4:
        raise DimensionError(f"Gauss-Bonnet-Chern integrand needs dim 4, got {tensor.dim}")
    inv = invariants(tensor)
    return q_from_invariants(inv) + inv.weyl_norm_sq / 8.0


def monte_carlo_sphere_integral(
    func: Callable[[np.ndarray], np.ndarray], radius: float, samples: int, seed: int
) -> Tuple[float, float]:
    """
    Integrate ``func`` over S^4 of the given radius.

    Points are normalized 5-dimensional Gaussians, hence uniform on the
    sphere; ``func`` receives an array of shape (samples, 5).

    Returns:
        (estimate, standard error)
    """
    if samples < 2:
        raise ValueError("samples must be at least 2")
    rng = run_rng(seed)
    points = rng.standard_normal((samples, 5))
    points *= radius / np.linalg.norm(points, axis=1, keepdims=True)
    values = np.asarray(func(points), dtype=float)
    volume = VOL_S4 * radius**4
    estimate = volume * float(values.mean())
    stderr = volume * float(values.std(ddof=1)) / np.sqrt(samples)
    return estimate, stderr


def _euler_from_integral(gbc: float) -> float:
    chi = gbc / FOUR_PI_SQ
    nearest = round(chi)
    return float(nearest) if abs(chi - nearest) <= INTEGER_TOL else chi


def integrate_slice(
    slice_: SliceGeometry,
    monte_carlo: bool = False,
    samples: int = 100_000,
    seed: int = 0,
) -> IntegralReport:
    """
    Gauss-Bonnet-Chern integral, Euler number and the volume functional of a slice.

    Args:
        slice_: Slice geometry
        monte_carlo: Also estimate the integral by sampling S^4
        samples: Monte Carlo sample count
        seed: Monte Carlo seed

    Returns:
        IntegralReport with slack = int (1 + H^2)^2 - (4 pi^2 / 3) chi
    """
    integrand = gbc_integrand(slice_.induced)
    gbc = integrand * slice_.volume
    euler = _euler_from_integral(gbc)
    volume_functional = (1.0 + slice_.mean_curvature**2) ** 2 * slice_.volume
    rhs = FOUR_PI_SQ / 3.0 * euler

    estimate = stderr = None
    if monte_carlo:
        estimate, stderr = monte_carlo_sphere_integral(
            lambda x: np.full(x.shape[0], integrand), slice_.phi, samples, seed
        )

    report = IntegralReport(
        gbc_integral=gbc,
        euler_number=euler,
        volume_functional=volume_functional,
        rhs=rhs,
        slack=volume_functional - rhs,
        method="monte_carlo" if monte_carlo else "analytic",
        mc_estimate=estimate,
        mc_stderr=stderr,
        mc_samples=samples if monte_carlo else None,
    )
    logger.info(
        f"Slice {slice_.preset.name} t={slice_.t}: chi={euler}, volume functional {volume_functional:.10f}, "
        f"slack {report.slack:.3e}"
    )
    return report
