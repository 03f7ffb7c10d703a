"""The small-|H| threshold below which the |H| f(|H|) correction can be dropped.

For |H| <= eps0 every case II point has |A0| >= sqrt(12 + 24 H^2) >= eta2,
where F(|A0|) <= 0.  The threshold is the positive root of
g(h) = sqrt(12 + 24 h^2) - eta2(h).
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect

from src.claim.quantities import SQRT3, f_profile
from src.errors import ConstraintError

logger = logging.getLogger(__name__)

ROOT_XTOL = 1e-14
AGREEMENT_TOL = 1e-10
SIGN_PROBE = 1e-6

CLOSED_FORM = float(np.sqrt((8.0 * SQRT3 - 13.0) / 46.0))
# Value printed in the source, missing the 1/46 inside the radical
PRINTED_VALUE = float(np.sqrt((368.0 * SQRT3 - 598.0) / 46.0))


def threshold_gap(h: float) -> float:
    """g(h) = sqrt(12 + 24 h^2) - eta2(h)."""
    return float(np.sqrt(12.0 + 24.0 * h**2)) - f_profile(0.0, h).eta2


@dataclass(frozen=True)
class Epsilon0Report:
    root: float
    closed_form: float
    printed_value: float
    gap_below: float
    gap_above: float

    @property
    def discrepancy_factor(self) -> float:
        """Ratio of the squared printed value to the squared derived one."""
        return self.printed_value**2 / self.closed_form**2

    def __float__(self) -> float:
        return self.root

    def to_dict(self) -> dict:
        return {
            "root": self.root,
            "closed_form": self.closed_form,
            "printed_value": self.printed_value,
            "discrepancy_factor": self.discrepancy_factor,
            "gap_below": self.gap_below,
            "gap_above": self.gap_above,
        }


def epsilon0_threshold() -> Epsilon0Report:
    """
    Bisect g on [0, 1] and confirm the closed form sqrt((8 sqrt(3) - 13)/46).

    Raises:
        ConstraintError: bisection and closed form disagree beyond 1e-10
    """
    root = float(bisect(threshold_gap, 0.0, 1.0, xtol=ROOT_XTOL, maxiter=200))
    if abs(root - CLOSED_FORM) > AGREEMENT_TOL:
        raise ConstraintError(f"Bisection root {root!r} disagrees with closed form {CLOSED_FORM!r}")

    report = Epsilon0Report(
        root=root,
        closed_form=CLOSED_FORM,
        printed_value=PRINTED_VALUE,
        gap_below=threshold_gap(root - SIGN_PROBE),
        gap_above=threshold_gap(root + SIGN_PROBE),
    )
    logger.info(f"eps0 = {root:.13f} (printed value {PRINTED_VALUE:.5f})")
    return report
