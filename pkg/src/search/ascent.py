"""Derivative-free local ascent of the margin around a sample."""

import logging
from typing import Optional

import numpy as np
from scipy.optimize import minimize

from src.claim.margin import MarginReport, claim_margin, evaluate_margin
from src.errors import CurvGaugeError
from src.search.config import SearchConfig
from src.search.sampling import Point, SampledPoint, SearchFamily, realize_general, realize_warped

logger = logging.getLogger(__name__)

# Objective value for parameter vectors that cannot be realized
INFEASIBLE = 1e12


class MarginObjective:
    """
    Negative (penalized) margin as a function of a sample's parameters.

    Warped points are feasible by construction.  General points pay
    ``penalty_weight`` times their sectional and flatness violations.
    """

    def __init__(self, point: SampledPoint, config: SearchConfig):
        self.point = point
        self.config = config

    def realize(self, x: np.ndarray) -> Point:
        if self.point.family is SearchFamily.WARPED:
            return realize_warped(x, self.point.position, self.config.h_range, self.config.m_max)
        return realize_general(x, self.point.base, self.config.h_range, self.config.strict_lcf)

    def __call__(self, x: np.ndarray) -> float:
        try:
            amb, spec = self.realize(x)
            evaluation = evaluate_margin(amb, spec, bare=self.config.bare_bound)
        except CurvGaugeError:
            return INFEASIBLE

        value = evaluation.margin
        if self.point.family is SearchFamily.GENERAL:
            gate = evaluation.weyl_norm_sq if self.config.strict_lcf else evaluation.principal_weyl_max
            violation = evaluation.sectional_violation + max(0.0, gate - self.config.lcf_tol)
            value -= self.config.penalty_weight * violation
        return -value


def local_ascent(point: SampledPoint, config: SearchConfig) -> Optional[MarginReport]:
    """
    Nelder-Mead from ``point.params``.

    Returns:
        Margin report of the final point, or None when it falls outside the
        hypotheses (only possible for the general family)
    """
    objective = MarginObjective(point, config)
    result = minimize(
        objective,
        point.params,
        method="Nelder-Mead",
        options={"maxiter": config.ascent_iterations, "xatol": 1e-10, "fatol": 1e-13},
    )
    amb, spec = objective.realize(result.x)
    try:
        report = claim_margin(
            amb,
            spec,
            config.lcf_tol,
            strict_lcf=config.strict_lcf,
            bare=config.bare_bound,
            strict_admissible=config.strict_admissible,
            range_budget=config.range_budget,
        )
    except CurvGaugeError as exc:
        logger.debug(f"Ascent from sample {point.index} left the hypotheses: {exc}")
        return None
    logger.debug(f"Ascent from sample {point.index}: margin {report.margin:.6e} after {result.nit} iterations")
    return report
