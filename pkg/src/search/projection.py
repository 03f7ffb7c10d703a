"""Projections that put general-family samples inside the theorem's hypotheses."""

import logging
from functools import lru_cache
from typing import Optional

import numpy as np
from scipy.optimize import linprog

from src.claim.quantities import principal_weyl
from src.claim.spectrum import ShapeSpectrum
from src.curvature.ambient import PLANE_PAIRS, AmbientRestriction, gauss_induced
from src.curvature.tensor import CurvatureTensor, invariants, kulkarni_nomizu, sectional_tensor

logger = logging.getLogger(__name__)

# Keeps HiGHS feasibility slack from pushing sectionals just outside [0, 1]
REPAIR_MARGIN = 1e-6


def pairs_to_matrix(values: np.ndarray) -> np.ndarray:
    """Six plane values in PLANE_PAIRS order as an upper-triangular 4x4 matrix."""
    matrix = np.zeros((4, 4))
    for value, (i, j) in zip(values, PLANE_PAIRS):
        matrix[i, j] = value
    return matrix


@lru_cache(maxsize=1)
def _principal_weyl_jacobian() -> np.ndarray:
    """d W_ijij / d Rbar_klkl; constant because W is linear in the tensor."""
    columns = []
    for p in range(len(PLANE_PAIRS)):
        unit = np.zeros(len(PLANE_PAIRS))
        unit[p] = 1.0
        columns.append(principal_weyl(sectional_tensor(4, pairs_to_matrix(unit))))
    jac = np.column_stack(columns)
    jac.flags.writeable = False
    return jac


def project_principal_lcf(amb: AmbientRestriction, spec: ShapeSpectrum, steps: int = 2) -> AmbientRestriction:
    """
    Adjust the six ambient sectionals so that every induced W_ijij vanishes.

    The map is affine with a rank-2 Jacobian, so a minimum-norm Newton step
    solves it exactly; the second step only removes rounding.
    """
    jac = _principal_weyl_jacobian()
    for _ in range(steps):
        residual = principal_weyl(gauss_induced(amb, spec.shape_operator()))
        step, *_ = np.linalg.lstsq(jac, -residual, rcond=None)
        amb = amb.shifted(sectional_tensor(4, pairs_to_matrix(step)))
    return amb


def project_full_lcf(amb: AmbientRestriction, spec: ShapeSpectrum) -> AmbientRestriction:
    """Remove the induced Weyl tensor from the ambient, so W of the induced metric is 0."""
    weyl = invariants(gauss_induced(amb, spec.shape_operator())).weyl
    return amb.shifted(CurvatureTensor(4, -weyl))


def repair_admissibility(amb: AmbientRestriction) -> Optional[AmbientRestriction]:
    """
    Shift the ambient by diag(b) o g to bring its sectionals into [0, 1].

    The shift moves R_ijij by b_i + b_j and has no Weyl part, so every
    conformal flatness condition survives.  b minimizes sum |b_i| by linear
    programming.

    Returns:
        Repaired ambient, or None when no such shift exists
    """
    if amb.is_admissible():
        return amb

    r = amb.coordinate_sectionals()
    n = amb.dim
    rows, rhs = [], []
    for p, (i, j) in enumerate(PLANE_PAIRS):
        row = np.zeros(2 * n)
        row[i] = row[j] = 1.0
        rows.append(row)
        rhs.append(1.0 - REPAIR_MARGIN - r[p])
        rows.append(-row)
        rhs.append(r[p] - REPAIR_MARGIN)
    for i in range(n):
        for sign in (1.0, -1.0):
            row = np.zeros(2 * n)
            row[i] = sign
            row[n + i] = -1.0
            rows.append(row)
            rhs.append(0.0)

    result = linprog(
        np.r_[np.zeros(n), np.ones(n)],
        A_ub=np.array(rows),
        b_ub=np.array(rhs),
        bounds=[(None, None)] * n + [(0.0, None)] * n,
        method="highs",
    )
    if result.status != 0:
        logger.debug(f"Admissibility repair infeasible: {result.message}")
        return None

    shift = kulkarni_nomizu(np.diag(result.x[:n]), np.eye(n))
    repaired = amb.shifted(CurvatureTensor(n, shift))
    return repaired if repaired.is_admissible() else None
