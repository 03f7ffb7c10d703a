"""Seeded generators of curvature tensors for sampling and test suites."""

import numpy as np

from src.curvature.ambient import AmbientRestriction
from src.curvature.tensor import CurvatureTensor, kulkarni_nomizu


def _random_symmetric(rng: np.random.Generator, dim: int) -> np.ndarray:
    b = rng.standard_normal((dim, dim))
    return 0.5 * (b + b.T)


def random_algebraic_tensor(rng: np.random.Generator, dim: int = 4, terms: int = 3) -> CurvatureTensor:
    """Sum of Kulkarni-Nomizu products of random symmetric matrices."""
    comp = np.zeros((dim,) * 4)
    for _ in range(terms):
        comp += 0.5 * kulkarni_nomizu(_random_symmetric(rng, dim), _random_symmetric(rng, dim))
    return CurvatureTensor(dim, comp)


def random_admissible_ambient(rng: np.random.Generator, dim: int = 4) -> AmbientRestriction:
    """
    Random ambient restriction with every coordinate sectional in [0, 1].

    A constant-curvature part plus rank-one metric perturbations v v^T o g
    and a Gauss-type term h o h, affinely rescaled and shifted so that the
    coordinate sectionals land in a random sub-interval of [0, 1].
    """
    g = np.eye(dim)
    raw = 0.5 * rng.uniform(0.0, 1.0) * kulkarni_nomizu(g, g)
    for _ in range(2):
        v = rng.standard_normal(dim)
        raw += 0.5 * rng.normal() * kulkarni_nomizu(np.outer(v, v), g)
    h = _random_symmetric(rng, dim)
    raw += 0.25 * rng.uniform(0.0, 1.0) * kulkarni_nomizu(h, h)

    pairs = [(i, j) for i in range(dim) for j in range(i + 1, dim)]
    r = np.array([raw[i, j, i, j] for i, j in pairs])
    lo, span = float(r.min()), float(r.max() - r.min())

    width = rng.uniform(0.0, 1.0)
    shift = rng.uniform(0.0, 1.0 - width)
    unit = 0.5 * kulkarni_nomizu(g, g)
    if span > 0.0:
        comp = (width / span) * (raw - lo * unit) + shift * unit
    else:
        comp = shift * unit
    return AmbientRestriction.from_tensor(CurvatureTensor(dim, comp))
