"""Shared settings and random generators."""

from .rng import GENERATOR_NAME, run_rng, sample_rng
from .settings import ENV_PREFIX, VerifierSettings

__all__ = [
    "GENERATOR_NAME",
    "run_rng",
    "sample_rng",
    "ENV_PREFIX",
    "VerifierSettings",
]
