"""Warping functions phi with closed-form derivatives."""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Optional, Tuple

import numpy as np
from numpy.polynomial import Polynomial

from src.errors import DomainError

logger = logging.getLogger(__name__)

Evaluator = Callable[[float], float]


class PresetId(str, Enum):
    SIN = "sin"
    CONST1 = "const1"
    COSH = "cosh"
    POLYNOMIAL = "poly"


@dataclass(frozen=True)
class WarpedPreset:
    """
    Warping function of M = R x_phi S^4 and its first two derivatives.

    ``domain`` is an open interval; phi must be positive where it is used.
    """

    preset_id: PresetId
    phi: Evaluator
    phi_dot: Evaluator
    phi_ddot: Evaluator
    domain: Tuple[float, float] = (-np.inf, np.inf)
    coefficients: Tuple[float, ...] = field(default=())

    @property
    def name(self) -> str:
        if self.preset_id is PresetId.POLYNOMIAL:
            return "poly:" + ",".join(repr(c) for c in self.coefficients)
        return self.preset_id.value

    def contains(self, t: float) -> bool:
        lo, hi = self.domain
        return bool(np.isfinite(t) and lo < t < hi)

    def self_test(self, points: Iterable[float], rel_tol: float = 1e-6) -> float:
        """
        Compare the derivative evaluators with central differences of phi.

        Returns:
            Largest relative deviation over the points

        Raises:
            DomainError: a deviation exceeds rel_tol
        """
        worst = 0.0
        for t in points:
            h1, h2 = 1e-5, 1e-4
            d1 = (self.phi(t + h1) - self.phi(t - h1)) / (2 * h1)
            d2 = (self.phi(t + h2) - 2 * self.phi(t) + self.phi(t - h2)) / h2**2
            scale = max(1.0, abs(self.phi(t)))
            worst = max(
                worst,
                abs(d1 - self.phi_dot(t)) / scale,
                abs(d2 - self.phi_ddot(t)) / scale,
            )
        if worst > rel_tol:
            raise DomainError(f"Preset {self.name} derivatives deviate by {worst:.3e}")
        return worst


def sin_preset() -> WarpedPreset:
    """phi = sin t on (0, pi): the round S^5."""
    return WarpedPreset(
        PresetId.SIN,
        phi=lambda t: float(np.sin(t)),
        phi_dot=lambda t: float(np.cos(t)),
        phi_ddot=lambda t: float(-np.sin(t)),
        domain=(0.0, float(np.pi)),
    )


def const1_preset() -> WarpedPreset:
    """phi = 1: the cylinder R x S^4."""
    return WarpedPreset(
        PresetId.CONST1,
        phi=lambda t: 1.0,
        phi_dot=lambda t: 0.0,
        phi_ddot=lambda t: 0.0,
    )


def cosh_preset() -> WarpedPreset:
    return WarpedPreset(
        PresetId.COSH,
        phi=lambda t: float(np.cosh(t)),
        phi_dot=lambda t: float(np.sinh(t)),
        phi_ddot=lambda t: float(np.cosh(t)),
    )


def polynomial_preset(
    coefficients: Iterable[float], domain: Optional[Tuple[float, float]] = None
) -> WarpedPreset:
    """phi = c0 + c1 t + c2 t^2 + ..., differentiated exactly."""
    coeffs = tuple(float(c) for c in coefficients)
    if not coeffs:
        raise DomainError("Polynomial preset needs at least one coefficient")
    poly = Polynomial(coeffs)
    d1 = poly.deriv(1)
    d2 = poly.deriv(2)
    return WarpedPreset(
        PresetId.POLYNOMIAL,
        phi=lambda t: float(poly(t)),
        phi_dot=lambda t: float(d1(t)),
        phi_ddot=lambda t: float(d2(t)),
        domain=domain or (-np.inf, np.inf),
        coefficients=coeffs,
    )


def preset_from_name(name: str) -> WarpedPreset:
    """
    Parse a preset name: ``sin``, ``const1``, ``cosh`` or ``poly:c0,c1,...``.

    Raises:
        DomainError: unknown name or malformed coefficients
    """
    key = name.strip().lower()
    builders = {
        PresetId.SIN.value: sin_preset,
        PresetId.CONST1.value: const1_preset,
        PresetId.COSH.value: cosh_preset,
    }
    if key in builders:
        return builders[key]()
    if key.startswith(PresetId.POLYNOMIAL.value + ":"):
        try:
            coeffs = [float(c) for c in key.split(":", 1)[1].split(",") if c.strip()]
        except ValueError as exc:
            raise DomainError(f"Malformed polynomial coefficients in {name!r}") from exc
        return polynomial_preset(coeffs)
    raise DomainError(f"Unknown warping preset {name!r}")
