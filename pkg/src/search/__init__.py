"""Falsification search over admissible conformally flat data, and the eps0 threshold."""

from .ascent import MarginObjective, local_ascent
from .config import SearchConfig
from .epsilon import CLOSED_FORM, PRINTED_VALUE, Epsilon0Report, epsilon0_threshold, threshold_gap
from .projection import project_full_lcf, project_principal_lcf, repair_admissibility
from .runner import SearchReport, ShardResult, evaluate_shard, maximize_margin, merge_shards, shard_bounds
from .sampling import SampledPoint, SearchFamily, realize_general, realize_warped, sample_point

__all__ = [
    "MarginObjective",
    "local_ascent",
    "SearchConfig",
    "CLOSED_FORM",
    "PRINTED_VALUE",
    "Epsilon0Report",
    "epsilon0_threshold",
    "threshold_gap",
    "project_full_lcf",
    "project_principal_lcf",
    "repair_admissibility",
    "SearchReport",
    "ShardResult",
    "evaluate_shard",
    "maximize_margin",
    "merge_shards",
    "shard_bounds",
    "SampledPoint",
    "SearchFamily",
    "realize_general",
    "realize_warped",
    "sample_point",
]
