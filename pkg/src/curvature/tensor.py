"""Algebraic curvature tensors in orthonormal frames.

Components are stored as a dense ``dim**4`` table.  Construction symmetrizes
over the pair symmetries and then *validates* the first Bianchi identity; it
never projects onto it, so malformed input is rejected instead of altered.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy.optimize import minimize

from src.errors import BianchiViolation, DimensionError, DimensionMismatch, FrameError, ShapeError

logger = logging.getLogger(__name__)

MIN_DIM = 2
MAX_DIM = 5
CONSTRUCTION_TOL = 1e-9
INVARIANT_TOL = 1e-10
FRAME_TOL = 1e-12


def symmetrize(comp: np.ndarray) -> np.ndarray:
    """Antisymmetrize both index pairs, then symmetrize pair exchange."""
    t = 0.5 * (comp - comp.transpose(1, 0, 2, 3))
    t = 0.5 * (t - t.transpose(0, 1, 3, 2))
    return 0.5 * (t + t.transpose(2, 3, 0, 1))


def bianchi_residual(comp: np.ndarray) -> float:
    """Largest |R_ijkl + R_jkil + R_kijl| over all indices."""
    cyclic = comp + np.einsum("jkil->ijkl", comp) + np.einsum("kijl->ijkl", comp)
    return float(np.max(np.abs(cyclic))) if cyclic.size else 0.0


def kulkarni_nomizu(h: np.ndarray, k: np.ndarray) -> np.ndarray:
    """Kulkarni-Nomizu product of two symmetric matrices.

    (h o k)_ijkl = h_ik k_jl + h_jl k_ik - h_il k_jk - h_jk k_il
    """
    return (
        np.einsum("ik,jl->ijkl", h, k)
        + np.einsum("jl,ik->ijkl", h, k)
        - np.einsum("il,jk->ijkl", h, k)
        - np.einsum("jk,il->ijkl", h, k)
    )


@dataclass(frozen=True, eq=False)
class CurvatureTensor:
    """
    Rank-4 curvature tensor with the algebraic symmetries of a Riemann tensor.

    Instances are immutable: ``comp`` is a read-only array.  Build them with
    ``make_curvature_tensor`` (or the helpers below), which guarantee the pair
    symmetries exactly and the Bianchi identity to ``CONSTRUCTION_TOL``.
    """

    dim: int
    comp: np.ndarray

    def __post_init__(self) -> None:
        comp = np.array(self.comp, dtype=float)
        comp.flags.writeable = False
        object.__setattr__(self, "comp", comp)

    def _check_dim(self, other: "CurvatureTensor") -> None:
        if other.dim != self.dim:
            raise DimensionMismatch(f"Cannot combine dim {self.dim} with dim {other.dim}")

    def __add__(self, other: "CurvatureTensor") -> "CurvatureTensor":
        self._check_dim(other)
        return CurvatureTensor(self.dim, self.comp + other.comp)

    def __sub__(self, other: "CurvatureTensor") -> "CurvatureTensor":
        self._check_dim(other)
        return CurvatureTensor(self.dim, self.comp - other.comp)

    def __mul__(self, scalar: float) -> "CurvatureTensor":
        return CurvatureTensor(self.dim, float(scalar) * self.comp)

    __rmul__ = __mul__

    def __neg__(self) -> "CurvatureTensor":
        return CurvatureTensor(self.dim, -self.comp)

    @property
    def coordinate_sectionals(self) -> np.ndarray:
        """Matrix K with K[i, j] = R_ijij (zero diagonal)."""
        idx = np.arange(self.dim)
        return self.comp[idx[:, None], idx[None, :], idx[:, None], idx[None, :]].copy()

    def bianchi_residual(self) -> float:
        return bianchi_residual(self.comp)

    def allclose(self, other: "CurvatureTensor", atol: float = INVARIANT_TOL) -> bool:
        return self.dim == other.dim and bool(np.allclose(self.comp, other.comp, rtol=0.0, atol=atol))


@dataclass(frozen=True, eq=False)
class CurvatureInvariants:
    """Contractions and Weyl part of a curvature tensor."""

    ric: np.ndarray
    scalar: float
    einstein: np.ndarray
    weyl: np.ndarray
    weyl_norm_sq: float
    ric_norm_sq: float

    @property
    def einstein_norm_sq(self) -> float:
        return float(np.sum(self.einstein**2))

    @property
    def weyl_trace_residual(self) -> float:
        """Largest |sum_k W_ikjk|."""
        return float(np.max(np.abs(np.einsum("ikjk->ij", self.weyl))))


def make_curvature_tensor(dim: int, comp: np.ndarray) -> CurvatureTensor:
    """
    Build a curvature tensor from a raw component table.

    Args:
        dim: Dimension of the underlying space
        comp: Table of shape (dim, dim, dim, dim)

    Returns:
        Tensor holding the symmetrized components

    Raises:
        ShapeError: Wrong shape, unsupported dimension or non-finite entries
        BianchiViolation: Symmetrized table fails the first Bianchi identity
    """
    if not MIN_DIM <= dim <= MAX_DIM:
        raise ShapeError(f"dim must be between {MIN_DIM} and {MAX_DIM}, got {dim}")

    table = np.asarray(comp, dtype=float)
    if table.shape != (dim,) * 4:
        raise ShapeError(f"Expected component table of shape {(dim,) * 4}, got {table.shape}")
    if not np.all(np.isfinite(table)):
        raise ShapeError("Component table has non-finite entries")

    sym = symmetrize(table)
    residual = bianchi_residual(sym)
    if residual > CONSTRUCTION_TOL:
        raise BianchiViolation(
            f"Bianchi residual {residual:.3e} exceeds tolerance {CONSTRUCTION_TOL:.0e}"
        )
    return CurvatureTensor(dim, sym)


def constant_curvature(dim: int, c: float) -> CurvatureTensor:
    """Space form tensor c (delta_ik delta_jl - delta_il delta_jk)."""
    g = np.eye(dim)
    return CurvatureTensor(dim, 0.5 * float(c) * kulkarni_nomizu(g, g))


def sectional_tensor(dim: int, values: np.ndarray) -> CurvatureTensor:
    """
    Tensor whose only non-zero components are the coordinate-plane ones.

    Args:
        dim: Dimension
        values: dim x dim matrix; entry (i, j) with i < j becomes R_ijij

    Returns:
        Tensor satisfying the Bianchi identity exactly
    """
    values = np.asarray(values, dtype=float)
    comp = np.zeros((dim,) * 4)
    for i in range(dim):
        for j in range(i + 1, dim):
            r = values[i, j]
            comp[i, j, i, j] = r
            comp[j, i, j, i] = r
            comp[i, j, j, i] = -r
            comp[j, i, i, j] = -r
    return CurvatureTensor(dim, comp)


def invariants(tensor: CurvatureTensor) -> CurvatureInvariants:
    """
    Ricci, scalar, Einstein and Weyl parts of a tensor.

    Uses the dimension-n Weyl coefficients 1/(n-2) and S/((n-1)(n-2)).

    Raises:
        DimensionError: dim < 3
    """
    n = tensor.dim
    if n < 3:
        raise DimensionError(f"Weyl tensor undefined in dimension {n}")

    comp = tensor.comp
    g = np.eye(n)
    ric = np.einsum("ikjk->ij", comp)
    scalar = float(np.trace(ric))
    einstein = ric - (scalar / n) * g
    weyl = (
        comp
        - kulkarni_nomizu(ric, g) / (n - 2)
        + scalar / (2.0 * (n - 1) * (n - 2)) * kulkarni_nomizu(g, g)
    )
    return CurvatureInvariants(
        ric=ric,
        scalar=scalar,
        einstein=einstein,
        weyl=weyl,
        weyl_norm_sq=float(np.sum(weyl**2)),
        ric_norm_sq=float(np.sum(ric**2)),
    )


def sectional(tensor: CurvatureTensor, u: np.ndarray, v: np.ndarray) -> float:
    """
    Sectional curvature of the plane spanned by orthonormal u, v.

    Raises:
        FrameError: u, v not orthonormal within FRAME_TOL
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != (tensor.dim,) or v.shape != (tensor.dim,):
        raise FrameError(f"Vectors must have length {tensor.dim}")
    if (
        abs(u @ u - 1.0) > FRAME_TOL
        or abs(v @ v - 1.0) > FRAME_TOL
        or abs(u @ v) > FRAME_TOL
    ):
        raise FrameError("u and v must be orthonormal")
    return float(np.einsum("ijkl,i,j,k,l->", tensor.comp, u, v, u, v))


def _orthonormal_pair(x: np.ndarray, dim: int) -> Optional[Tuple[np.ndarray, np.ndarray]]:
    a, b = x[:dim], x[dim:]
    na = np.linalg.norm(a)
    if na < 1e-12:
        return None
    u = a / na
    w = b - (b @ u) * u
    nw = np.linalg.norm(w)
    if nw < 1e-12:
        return None
    return u, w / nw


def sectional_range(
    tensor: CurvatureTensor, budget: int, seed: int, refine: int = 3
) -> Tuple[float, float]:
    """
    Estimate min and max sectional curvature over all 2-planes.

    Samples ``budget`` random planes, then runs Nelder-Mead from the
    ``refine`` best samples at each end.  This is an estimate, not an
    enclosure: the true range may be wider.

    Args:
        tensor: Curvature tensor
        budget: Number of random planes
        seed: Seed for the plane sampler
        refine: Number of local refinements per end

    Returns:
        (min_estimate, max_estimate)
    """
    if budget < 1:
        raise ValueError("budget must be positive")

    n = tensor.dim
    rng = np.random.Generator(np.random.PCG64(seed))
    raw = rng.standard_normal((budget, 2 * n))

    u = raw[:, :n] / np.linalg.norm(raw[:, :n], axis=1, keepdims=True)
    w = raw[:, n:] - np.sum(raw[:, n:] * u, axis=1, keepdims=True) * u
    v = w / np.linalg.norm(w, axis=1, keepdims=True)
    values = np.einsum("ijkl,ni,nj,nk,nl->n", tensor.comp, u, v, u, v)

    lo, hi = float(values.min()), float(values.max())
    order = np.argsort(values, kind="stable")

    def plane_value(x: np.ndarray, sign: float) -> float:
        pair = _orthonormal_pair(x, n)
        if pair is None:
            return np.inf
        return sign * float(np.einsum("ijkl,i,j,k,l->", tensor.comp, pair[0], pair[1], pair[0], pair[1]))

    for sign, starts in ((1.0, order[:refine]), (-1.0, order[::-1][:refine])):
        for idx in starts:
            result = minimize(
                plane_value, raw[idx], args=(sign,), method="Nelder-Mead", options={"maxiter": 200}
            )
            if np.isfinite(result.fun):
                if sign > 0:
                    lo = min(lo, float(result.fun))
                else:
                    hi = max(hi, -float(result.fun))

    logger.debug(f"Sectional range estimate [{lo:.6g}, {hi:.6g}] from {budget} planes")
    return lo, hi
