"""Pointwise inequality chain for conformally flat hypersurfaces of R x_phi S^4.

For the pattern spectrum (m, m, m, -3m) + H over the warped ambient,
Q has the closed form

    Q = 3(k2 + H^2)^2 + (1/12)(-3/4 s^2 + 12 H P3 - 6(k2 + 3H^2) s)
        + (d/2)((6 k2 + 4H^2 - s) tau + 2 sum T_i^2 (mu_i - H)^2)

with s = |A0|^2, P3 = sum mu^3, tau = |T|^2 and d = k1 - k2 <= 0.  Each link
below drops a non-positive term, ending at 3(1 + H^2)^2 when k2 <= 1.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.claim.quantities import SQRT3, q_direct
from src.curvature.ambient import gauss_induced
from src.errors import NotAdmissibleForRotsym
from src.warped.geometry import KappaPair, TangentProjection, pattern_order, pattern_point

logger = logging.getLogger(__name__)

CHAIN_TOL = 1e-9
P4_TOL = 1e-12
LINK_NAMES = ("q", "chain1", "chain2", "chain3", "kappa_bound", "unit_bound")


@dataclass(frozen=True)
class RotsymChain:
    """Q, its closed forms and the links of the chain, in order."""

    q: float
    q_closed_form: float
    printed_form: float
    links: Tuple[float, ...]
    p4_residual: float

    @property
    def closed_form_residual(self) -> float:
        return self.q - self.q_closed_form

    @property
    def printed_form_residual(self) -> float:
        """Residual of the variant with (6 + s + 4H^2) in place of (6 k2 + 4H^2 - s)."""
        return self.q - self.printed_form

    @property
    def worst_step(self) -> float:
        """Largest scaled increase between consecutive links; <= 0 means monotone."""
        links = np.asarray(self.links)
        scale = max(1.0, float(np.max(np.abs(links))))
        return float(np.max(links[:-1] - links[1:])) / scale

    @property
    def monotone(self) -> bool:
        return self.worst_step <= CHAIN_TOL

    @property
    def margin(self) -> float:
        return self.links[0] - self.links[-1]

    def to_dict(self) -> dict:
        return {
            **dict(zip(LINK_NAMES, self.links)),
            "q_closed_form": self.q_closed_form,
            "closed_form_residual": self.closed_form_residual,
            "printed_form_residual": self.printed_form_residual,
            "p4_residual": self.p4_residual,
            "worst_step": self.worst_step,
        }


def rotsym_margin(
    k: KappaPair,
    tangent: TangentProjection,
    m: float,
    mean_curvature: float,
    position: int = 4,
) -> RotsymChain:
    """
    Evaluate Q and every link of the chain at a pattern point.

    Args:
        k: Curvatures of the warped ambient at the point
        tangent: Tangential part of d/dt, in the pattern's frame
        m: Pattern scale
        mean_curvature: H
        position: 1-based slot of the exceptional eigenvalue -3m

    Raises:
        NotAdmissibleForRotsym: unless 0 <= kappa1 <= kappa2 <= 1
    """
    if not k.admissible_for_rotsym:
        raise NotAdmissibleForRotsym(
            f"kappa1={k.kappa1}, kappa2={k.kappa2} violate 0 <= kappa1 <= kappa2 <= 1"
        )

    amb, spec = pattern_point(k, tangent, m, mean_curvature, position)
    t = tangent.vector[pattern_order(m, mean_curvature, position)]

    h = spec.mean_curvature
    mu = np.asarray(spec.traceless)
    s = spec.a_norm_sq
    d = k.delta
    tau = float(t @ t)
    weighted = float(np.sum(t**2 * (mu - h) ** 2))

    base = 3.0 * (k.kappa2 + h**2) ** 2
    g = (-0.75 * s**2 + 12.0 * h * spec.p3 - 6.0 * (k.kappa2 + 3.0 * h**2) * s) / 12.0
    closed = base + g + 0.5 * d * ((6.0 * k.kappa2 + 4.0 * h**2 - s) * tau + 2.0 * weighted)
    printed = base + g + 0.5 * d * ((6.0 + s + 4.0 * h**2) * tau + 2.0 * weighted)

    cubic = 4.0 * SQRT3 * abs(h) * s**1.5
    chain1 = base + g - 0.5 * d * s * tau
    chain2 = base + (-0.75 * s**2 + cubic - 6.0 * (k.kappa2 + 3.0 * h**2) * s) / 12.0 - 0.5 * d * s * tau
    chain3 = base + (-0.75 * s**2 + cubic - 18.0 * h**2 * s) / 12.0

    q = q_direct(gauss_induced(amb, spec.shape_operator()))
    chain = RotsymChain(
        q=q,
        q_closed_form=closed,
        printed_form=printed,
        links=(q, chain1, chain2, chain3, base, 3.0 * (1.0 + h**2) ** 2),
        p4_residual=spec.p4 - 7.0 / 12.0 * s**2,
    )
    if not chain.monotone:
        logger.warning(f"Chain not monotone at k={k}, T={tangent.components}, m={m}, H={h}")
    return chain
