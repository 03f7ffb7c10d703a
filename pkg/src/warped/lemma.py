"""Conformal flatness of hypersurfaces in warped products.

In this setting the ambient contributions to W_ijij cancel, leaving a
formula in the traceless principal curvatures alone.  It vanishes exactly
when the spectrum has the form (m, ..., m, -(n-1)m).
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from src.errors import ConstraintError

TRACE_TOL = 1e-12


@dataclass(frozen=True)
class LcfPattern:
    pattern: bool
    m: float
    position: int  # 1-based index of the exceptional eigenvalue, 0 when no pattern


def lcf_weyl(mu: Sequence[float], n: int = 4) -> np.ndarray:
    """
    W_ijij for i < j: [(mu_i + mu_j)^2 + (n-4) mu_i mu_j]/(n-2) - |A0|^2/((n-1)(n-2)).

    Raises:
        ConstraintError: wrong length, n < 4, or mu not trace-free
    """
    values = np.asarray(mu, dtype=float)
    if n < 4:
        raise ConstraintError(f"n must be at least 4, got {n}")
    if values.shape != (n,):
        raise ConstraintError(f"Expected {n} eigenvalues, got shape {values.shape}")
    scale = max(1.0, float(np.max(np.abs(values))))
    if abs(float(np.sum(values))) > TRACE_TOL * scale:
        raise ConstraintError(f"Traceless eigenvalues sum to {np.sum(values):.3e}")

    s = float(np.sum(values**2))
    i, j = np.triu_indices(n, k=1)
    mi, mj = values[i], values[j]
    return ((mi + mj) ** 2 + (n - 4) * mi * mj) / (n - 2) - s / ((n - 1) * (n - 2))


def lcf_classify(mu: Sequence[float], tol: float = 1e-9) -> LcfPattern:
    """Detect the pattern {m, ..., m, -(n-1)m} up to permutation."""
    values = np.asarray(mu, dtype=float)
    if abs(float(np.sum(values))) > max(tol, TRACE_TOL):
        raise ConstraintError(f"Traceless eigenvalues sum to {np.sum(values):.3e}")

    for p in range(values.size):
        others = np.delete(values, p)
        m = float(np.mean(others))
        if np.max(np.abs(others - m)) <= tol and abs(values[p] + (values.size - 1) * m) <= tol:
            return LcfPattern(pattern=True, m=m, position=p + 1)
    return LcfPattern(pattern=False, m=0.0, position=0)
