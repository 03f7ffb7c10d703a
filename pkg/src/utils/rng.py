"""Reproducible random generators.

Every sample draws from its own ``PCG64`` stream keyed by ``(seed, index)``,
so results do not depend on evaluation order or sharding.
"""
import numpy as np

GENERATOR_NAME = "numpy.random.PCG64 seeded by SeedSequence([seed, index])"


def sample_rng(seed: int, index: int) -> np.random.Generator:
    """Generator for sample ``index`` of a run seeded with ``seed``."""
    if seed < 0 or index < 0:
        raise ValueError("seed and index must be non-negative")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, index])))


def run_rng(seed: int) -> np.random.Generator:
    """Generator for whole-run draws that are not tied to a sample index."""
    if seed < 0:
        raise ValueError("seed must be non-negative")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
