"""Seeded sample families for the falsification search.

* warped: conformally flat pattern spectra over the rotationally symmetric
  ambient, flat by construction.
* general: random admissible ambients with free traceless spectra, projected
  onto the conformal flatness conditions the proof uses.

Both families are functions of ``(seed, index)`` only, and each exposes the
continuous parameter vector the local ascent works on.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Tuple

import numpy as np

from src.claim.cases import umbilicity_threshold
from src.claim.spectrum import ShapeSpectrum, shape_spectrum
from src.curvature.ambient import AmbientRestriction
from src.curvature.generators import random_admissible_ambient
from src.curvature.tensor import sectional_tensor
from src.search.projection import (
    pairs_to_matrix,
    project_full_lcf,
    project_principal_lcf,
    repair_admissibility,
)
from src.utils.rng import sample_rng
from src.warped.geometry import KappaPair, TangentProjection, pattern_point, pattern_traceless

logger = logging.getLogger(__name__)

DEFAULT_H_RANGE = (-2.0, 2.0)
DEFAULT_M_MAX = 3.0
MAX_ATTEMPTS = 16
NEAR_PATTERN_SHARE = 0.5
# Draws with two positive and two negative mu outside the umbilic ball
SPLIT_SIGN_SHARE = 0.2

HRange = Tuple[float, float]
Point = Tuple[AmbientRestriction, ShapeSpectrum]


class SearchFamily(str, Enum):
    WARPED = "warped"
    GENERAL = "general"


@dataclass(frozen=True, eq=False)
class SampledPoint:
    """
    One search sample.

    Unpacks as ``ambient, spectrum``.  ``params`` is the vector the local
    ascent perturbs; ``base`` is the general family's pre-projection ambient.
    """

    family: SearchFamily
    index: int
    ambient: AmbientRestriction
    spectrum: ShapeSpectrum
    params: np.ndarray
    position: int = 4
    base: Optional[AmbientRestriction] = None
    attempts: int = 1

    def __iter__(self) -> Iterator:
        yield self.ambient
        yield self.spectrum


def realize_warped(x: np.ndarray, position: int, h_range: HRange, m_max: float) -> Point:
    """Map [k1, k2, T1..T4, m, H] onto the admissible warped family."""
    k = np.sort(np.clip(x[:2], 0.0, 1.0))
    t = np.asarray(x[2:6], dtype=float)
    norm = float(np.linalg.norm(t))
    if norm > 1.0:
        t = t / norm
    m = float(np.clip(x[6], -m_max, m_max))
    h = float(np.clip(x[7], *h_range))
    return pattern_point(KappaPair(float(k[0]), float(k[1])), TangentProjection(tuple(t)), m, h, position)


def realize_general(
    x: np.ndarray, base: AmbientRestriction, h_range: HRange, strict_lcf: bool = False
) -> Point:
    """
    Map [mu1..mu4, H, d1..d6] onto a conformally flat general point.

    mu is re-traced, H clamped, the six ambient sectionals of ``base`` are
    shifted by d, then the flatness projection and admissibility repair run.
    The returned ambient may still be inadmissible when repair fails.
    """
    mu = np.asarray(x[:4], dtype=float)
    mu = mu - mu.mean()
    h = float(np.clip(x[4], *h_range))
    spec = shape_spectrum(mu + h)

    amb = base.shifted(sectional_tensor(4, pairs_to_matrix(np.asarray(x[5:11]))))
    amb = project_full_lcf(amb, spec) if strict_lcf else project_principal_lcf(amb, spec)
    repaired = repair_admissibility(amb)
    return (repaired if repaired is not None else amb), spec


def _draw_traceless(rng: np.random.Generator, m_max: float, h_max: float) -> np.ndarray:
    # Feasible flat points need small eigenvalue gaps, so half the draws sit near the pattern set
    share = rng.uniform()
    if share < NEAR_PATTERN_SHARE:
        m = rng.uniform(-m_max, m_max)
        mu = pattern_traceless(m, int(rng.integers(1, 5))) + rng.normal(scale=0.05 * abs(m) + 1e-3, size=4)
    elif share < NEAR_PATTERN_SHARE + SPLIT_SIGN_SHARE:
        mu = _split_sign_traceless(rng, umbilicity_threshold(h_max))
    else:
        mu = rng.normal(size=4) * rng.uniform(0.0, 1.0)
    return mu - mu.mean()


def _split_sign_traceless(rng: np.random.Generator, threshold: float) -> np.ndarray:
    """Traceless (+, +, -, -) with |mu|^2 between 1.1 and 3 times ``threshold``."""
    pos = rng.uniform(0.2, 1.0, size=2)
    w = rng.uniform(0.2, 0.8)
    mu = np.r_[pos, -w * pos.sum(), -(1.0 - w) * pos.sum()]
    return mu * np.sqrt(threshold * rng.uniform(1.1, 3.0) / np.sum(mu**2))


def _sample_warped(seed: int, index: int, h_range: HRange, m_max: float) -> SampledPoint:
    rng = sample_rng(seed, index)
    k = np.sort(rng.uniform(0.0, 1.0, size=2))
    direction = rng.normal(size=4)
    t = direction / np.linalg.norm(direction) * rng.uniform() ** 0.25
    m = rng.uniform(-m_max, m_max)
    h = rng.uniform(*h_range)
    position = int(rng.integers(1, 5))

    params = np.r_[k, t, m, h]
    amb, spec = realize_warped(params, position, h_range, m_max)
    return SampledPoint(SearchFamily.WARPED, index, amb, spec, params, position=position)


def _sample_general(
    seed: int, index: int, h_range: HRange, m_max: float, strict_lcf: bool, max_attempts: int
) -> SampledPoint:
    rng = sample_rng(seed, index)
    for attempt in range(1, max_attempts + 1):
        base = random_admissible_ambient(rng)
        mu = _draw_traceless(rng, m_max, max(abs(h) for h in h_range))
        params = np.r_[mu, rng.uniform(*h_range), np.zeros(6)]
        amb, spec = realize_general(params, base, h_range, strict_lcf)
        if amb.is_admissible():
            break
    else:
        logger.debug(f"Sample {index}: no admissible projection after {max_attempts} attempts")
    return SampledPoint(
        SearchFamily.GENERAL, index, amb, spec, params, base=base, attempts=attempt
    )


def sample_point(
    family: SearchFamily,
    seed: int,
    index: int,
    h_range: HRange = DEFAULT_H_RANGE,
    m_max: float = DEFAULT_M_MAX,
    strict_lcf: bool = False,
    max_attempts: int = MAX_ATTEMPTS,
) -> SampledPoint:
    """
    Deterministic sample ``index`` of a run seeded with ``seed``.

    Args:
        family: Sample family
        seed: Run seed
        index: Sample index
        h_range: Closed interval for the mean curvature
        m_max: Bound on the pattern scale |m|
        strict_lcf: General family only; project the full Weyl tensor
        max_attempts: General family only; redraws before giving up

    Returns:
        The sampled point; general-family points may be inadmissible
    """
    family = SearchFamily(family)
    if family is SearchFamily.WARPED:
        return _sample_warped(seed, index, h_range, m_max)
    return _sample_general(seed, index, h_range, m_max, strict_lcf, max_attempts)
