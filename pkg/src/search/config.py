"""Validated search parameters."""

from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.curvature.ambient import DEFAULT_RANGE_BUDGET
from src.search.sampling import DEFAULT_H_RANGE, DEFAULT_M_MAX, MAX_ATTEMPTS, SearchFamily


class SearchConfig(BaseModel):
    """Parameters of one falsification run."""

    model_config = ConfigDict(frozen=True)

    family: SearchFamily = Field(default=SearchFamily.WARPED, description="Sample family")
    samples: int = Field(ge=1, description="Number of sampled points")
    restarts: int = Field(default=0, ge=0, description="Local ascents from the best samples")
    seed: int = Field(default=7, ge=0, description="Run seed")
    lcf_tol: float = Field(default=1e-8, gt=0, description="Conformal flatness gate")
    penalty_weight: float = Field(default=1e3, ge=0, description="General-family violation penalty")
    h_range: Tuple[float, float] = Field(default=DEFAULT_H_RANGE, description="Closed interval for H")
    m_max: float = Field(default=DEFAULT_M_MAX, gt=0, description="Bound on the pattern scale")
    strict_lcf: bool = Field(default=False, description="Gate and project on the full Weyl tensor")
    strict_admissible: bool = Field(
        default=False, description="Also bound the sampled sectional range over all 2-planes"
    )
    range_budget: int = Field(
        default=DEFAULT_RANGE_BUDGET, ge=1, description="Random planes per strict check"
    )
    bare_bound: bool = Field(default=False, description="Compare against 3(1+H^2)^2")
    ascent_iterations: int = Field(default=200, ge=1, description="Nelder-Mead iterations per restart")
    max_attempts: int = Field(default=MAX_ATTEMPTS, ge=1, description="General-family redraws")
    workers: int = Field(default=1, ge=1, description="Worker processes")
    collect_rows: bool = Field(default=False, description="Keep one row per sample")

    @field_validator("h_range")
    @classmethod
    def _finite_ordered(cls, value: Tuple[float, float]) -> Tuple[float, float]:
        lo, hi = value
        if not (np.isfinite(lo) and np.isfinite(hi)):
            raise ValueError("h_range must be finite")
        if lo > hi:
            raise ValueError("h_range must satisfy lo <= hi")
        return (float(lo), float(hi))
