"""
Runtime settings for the verifier.

Precedence:
 1. Command-line flags (applied by the CLI on top of these settings)
 2. CURVGAUGE_* environment variables (e.g. CURVGAUGE_SEED)
 3. A .env file in the working directory
 4. The defaults below
"""
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

ENV_PREFIX = "CURVGAUGE_"


class VerifierSettings(BaseSettings):
    """Defaults for seeds, worker count and numerical tolerances."""

    model_config = SettingsConfigDict(env_prefix=ENV_PREFIX, env_file=".env", extra="ignore")

    seed: int = Field(default=7, description="Default seed of every sampler")
    workers: int = Field(default=1, ge=1, description="Processes used by the search")
    log_level: str = Field(default="INFO", description="Root logging level")

    lcf_tol: float = Field(default=1e-8, gt=0, description="Conformal flatness gate")
    margin_tol: float = Field(default=1e-8, ge=0, description="Largest margin counted as a pass")
    decomposition_tol: float = Field(default=1e-9, gt=0, description="Q decomposition residual")
    identity_tol: float = Field(default=1e-10, gt=0, description="Algebraic identity residual")
    weyl_exact_tol: float = Field(default=1e-10, gt=0, description="Weyl norm of pattern points")
    chain_tol: float = Field(default=1e-9, gt=0, description="Monotonicity of the rotsym chain")
    integral_tol: float = Field(default=1e-9, gt=0, description="Slice integral residual")

    penalty_weight: float = Field(default=1e3, ge=0, description="Search penalty for violations")
    ascent_iterations: int = Field(default=200, ge=1, description="Nelder-Mead iterations per restart")
