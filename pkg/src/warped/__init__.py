"""Rotationally symmetric ambients: warping presets, curvature, the LCF lemma and the rotsym chain."""

from .geometry import (
    KappaPair,
    TangentProjection,
    kappa,
    pattern_order,
    pattern_point,
    pattern_traceless,
    warped_ambient,
    warped_closed_forms,
)
from .lemma import LcfPattern, lcf_classify, lcf_weyl
from .presets import (
    PresetId,
    WarpedPreset,
    const1_preset,
    cosh_preset,
    polynomial_preset,
    preset_from_name,
    sin_preset,
)
from .rotsym import RotsymChain, rotsym_margin

__all__ = [
    "KappaPair",
    "TangentProjection",
    "kappa",
    "pattern_order",
    "pattern_point",
    "pattern_traceless",
    "warped_ambient",
    "warped_closed_forms",
    "LcfPattern",
    "lcf_classify",
    "lcf_weyl",
    "PresetId",
    "WarpedPreset",
    "const1_preset",
    "cosh_preset",
    "polynomial_preset",
    "preset_from_name",
    "sin_preset",
    "RotsymChain",
    "rotsym_margin",
]
