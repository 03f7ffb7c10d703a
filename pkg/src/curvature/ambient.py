"""Tangential restriction of the ambient curvature and the Gauss equation."""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from src.curvature.shape import ShapeOperator
from src.curvature.tensor import CurvatureTensor, kulkarni_nomizu, make_curvature_tensor, sectional_range
from src.errors import DimensionMismatch

PLANE_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
ADMISSIBLE_TOL = 1e-12
# Slack on the sampled sectional range in strict mode
STRICT_RANGE_TOL = 1e-9
DEFAULT_RANGE_BUDGET = 256


@dataclass(frozen=True, eq=False)
class AmbientRestriction:
    """
    Ambient curvature components with all indices tangent to the hypersurface.

    ``sigma``, ``a``, ``a_ring`` and ``a_ring_norm_sq`` are derived from
    ``comp`` once, at construction.
    """

    comp: np.ndarray
    sigma: float
    a: np.ndarray
    a_ring: np.ndarray
    a_ring_norm_sq: float

    @classmethod
    def from_tensor(cls, tensor: CurvatureTensor) -> "AmbientRestriction":
        comp = np.array(tensor.comp, dtype=float)
        comp.flags.writeable = False
        a = np.einsum("ikjk->ij", comp)
        sigma = float(np.trace(a))
        a_ring = a - (sigma / tensor.dim) * np.eye(tensor.dim)
        return cls(
            comp=comp,
            sigma=sigma,
            a=a,
            a_ring=a_ring,
            a_ring_norm_sq=float(np.sum(a_ring**2)),
        )

    @property
    def dim(self) -> int:
        return self.comp.shape[0]

    def to_tensor(self) -> CurvatureTensor:
        return CurvatureTensor(self.dim, self.comp)

    def coordinate_sectionals(self) -> np.ndarray:
        """The six values R_ijij for i < j, in PLANE_PAIRS order."""
        return np.array([self.comp[i, j, i, j] for i, j in PLANE_PAIRS])

    def sectional_violation(self) -> float:
        """Total amount by which coordinate sectionals leave [0, 1]."""
        r = self.coordinate_sectionals()
        return float(np.sum(np.maximum(0.0, -r)) + np.sum(np.maximum(0.0, r - 1.0)))

    def sectional_range(self, budget: int = DEFAULT_RANGE_BUDGET, seed: int = 0) -> Tuple[float, float]:
        """Estimated (min, max) sectional curvature over all tangent 2-planes."""
        return sectional_range(self.to_tensor(), budget, seed)

    def is_admissible(
        self,
        tol: float = ADMISSIBLE_TOL,
        strict: bool = False,
        budget: int = DEFAULT_RANGE_BUDGET,
        seed: int = 0,
    ) -> bool:
        """
        Whether sectional curvatures lie in [0, 1].

        The default checks the six coordinate planes only.  With ``strict``
        the estimated range over all 2-planes must also lie in
        [-STRICT_RANGE_TOL, 1 + STRICT_RANGE_TOL].
        """
        r = self.coordinate_sectionals()
        if not (np.all(r >= -tol) and np.all(r <= 1.0 + tol)):
            return False
        if not strict:
            return True
        lo, hi = self.sectional_range(budget, seed)
        return lo >= -STRICT_RANGE_TOL and hi <= 1.0 + STRICT_RANGE_TOL

    def permuted(self, order: Sequence[int]) -> "AmbientRestriction":
        """Relabel the frame so that new index i is old index order[i]."""
        idx = np.asarray(order)
        comp = self.comp[np.ix_(idx, idx, idx, idx)]
        return AmbientRestriction.from_tensor(CurvatureTensor(self.dim, comp))

    def shifted(self, tensor: CurvatureTensor) -> "AmbientRestriction":
        return AmbientRestriction.from_tensor(CurvatureTensor(self.dim, self.comp + tensor.comp))


def gauss_induced(ambient: AmbientRestriction, shape: ShapeOperator) -> CurvatureTensor:
    """
    Intrinsic curvature of the hypersurface from the Gauss equation.

    R_ijkl = Rbar_ijkl + h_ik h_jl - h_il h_jk with h = diag(lambda).

    Raises:
        DimensionMismatch: ambient and shape operator dimensions differ
    """
    if ambient.dim != shape.dim:
        raise DimensionMismatch(
            f"Ambient restriction has dim {ambient.dim}, shape operator has dim {shape.dim}"
        )
    h = shape.matrix
    return make_curvature_tensor(ambient.dim, ambient.comp + 0.5 * kulkarni_nomizu(h, h))
