"""Diagonal shape operators."""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from src.errors import ShapeError


@dataclass(frozen=True)
class ShapeOperator:
    """Second fundamental form in its principal frame."""

    dim: int
    diag: Tuple[float, ...]

    def __post_init__(self) -> None:
        diag = tuple(float(x) for x in self.diag)
        if len(diag) != self.dim:
            raise ShapeError(f"Expected {self.dim} principal curvatures, got {len(diag)}")
        if not all(np.isfinite(diag)):
            raise ShapeError("Principal curvatures must be finite")
        object.__setattr__(self, "diag", diag)

    @classmethod
    def from_principal(cls, values: Sequence[float]) -> "ShapeOperator":
        return cls(len(values), tuple(values))

    @property
    def matrix(self) -> np.ndarray:
        return np.diag(self.diag)
