"""Sharded falsification search of the Claim."""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.claim.cases import CaseLabel
from src.claim.margin import MarginReport, claim_margin
from src.errors import NotAdmissible, NotLCF
from src.search.ascent import local_ascent
from src.search.config import SearchConfig
from src.search.sampling import SampledPoint, sample_point
from src.utils.rng import GENERATOR_NAME

logger = logging.getLogger(__name__)

Candidate = Tuple[float, int]


def _empty_histogram() -> Dict[str, int]:
    return {label.value: 0 for label in CaseLabel}


def _better(a: Optional[Tuple[float, int, MarginReport]], b: Optional[Tuple[float, int, MarginReport]]):
    """Higher margin wins; ties go to the lower sample index."""
    if a is None:
        return b
    if b is None:
        return a
    return a if (a[0], -a[1]) >= (b[0], -b[1]) else b


@dataclass
class ShardResult:
    """Partial search result over a contiguous index range."""

    start: int
    stop: int
    best: Optional[Tuple[float, int, MarginReport]] = None
    histogram: Dict[str, int] = field(default_factory=_empty_histogram)
    rejected: Dict[str, int] = field(default_factory=lambda: {"not_admissible": 0, "not_lcf": 0})
    max_weyl_norm_sq: float = 0.0
    top: List[Candidate] = field(default_factory=list)
    rows: List[dict] = field(default_factory=list)


def _row(point: SampledPoint, report: Optional[MarginReport], reason: str = "") -> dict:
    spec = point.spectrum
    row = {
        "index": point.index,
        "H": spec.mean_curvature,
        **{f"mu{i + 1}": mu for i, mu in enumerate(spec.traceless)},
        "sigma": point.ambient.sigma,
        "case": report.case.value if report else f"rejected:{reason}",
        "q": report.q if report else None,
        "bound": report.bound if report else None,
        "margin": report.margin if report else None,
        "weyl_norm_sq": report.weyl_norm_sq if report else None,
    }
    return row


def _keep_top(top: List[Candidate], k: int) -> List[Candidate]:
    return sorted(top, key=lambda c: (-c[0], c[1]))[:k]


def evaluate_shard(config: SearchConfig, start: int, stop: int) -> ShardResult:
    """Evaluate samples ``start`` .. ``stop - 1``."""
    result = ShardResult(start=start, stop=stop)
    for index in range(start, stop):
        point = sample_point(
            config.family,
            config.seed,
            index,
            h_range=config.h_range,
            m_max=config.m_max,
            strict_lcf=config.strict_lcf,
            max_attempts=config.max_attempts,
        )
        try:
            report = claim_margin(
                point.ambient,
                point.spectrum,
                config.lcf_tol,
                strict_lcf=config.strict_lcf,
                bare=config.bare_bound,
                strict_admissible=config.strict_admissible,
                range_budget=config.range_budget,
            )
        except NotAdmissible:
            result.rejected["not_admissible"] += 1
            if config.collect_rows:
                result.rows.append(_row(point, None, "not_admissible"))
            continue
        except NotLCF:
            result.rejected["not_lcf"] += 1
            if config.collect_rows:
                result.rows.append(_row(point, None, "not_lcf"))
            continue

        result.histogram[report.case.value] += 1
        result.max_weyl_norm_sq = max(result.max_weyl_norm_sq, report.weyl_norm_sq)
        result.best = _better(result.best, (report.margin, index, report))
        if config.restarts:
            result.top = _keep_top(result.top + [(report.margin, index)], config.restarts)
        if config.collect_rows:
            result.rows.append(_row(point, report))

    logger.debug(f"Shard [{start}, {stop}) done, {sum(result.histogram.values())} accepted")
    return result


def merge_shards(a: ShardResult, b: ShardResult) -> ShardResult:
    """Order-independent merge of two shard results."""
    lo, hi = (a, b) if a.start <= b.start else (b, a)
    return ShardResult(
        start=min(a.start, b.start),
        stop=max(a.stop, b.stop),
        best=_better(a.best, b.best),
        histogram={key: a.histogram[key] + b.histogram[key] for key in a.histogram},
        rejected={key: a.rejected[key] + b.rejected[key] for key in a.rejected},
        max_weyl_norm_sq=max(a.max_weyl_norm_sq, b.max_weyl_norm_sq),
        top=_keep_top(a.top + b.top, len(a.top) + len(b.top)),
        rows=lo.rows + hi.rows,
    )


def shard_bounds(samples: int, workers: int) -> List[Tuple[int, int]]:
    """Contiguous index ranges, fixed by the sample and worker counts."""
    chunks = np.array_split(np.arange(samples), workers)
    return [(int(c[0]), int(c[-1]) + 1) for c in chunks if c.size]


@dataclass
class SearchReport:
    """Outcome of a search: the worst point found and the sample statistics."""

    config: SearchConfig
    max_margin: Optional[float]
    argmax: Optional[MarginReport]
    argmax_index: Optional[int]
    case_histogram: Dict[str, int]
    rejected: int
    rejection_reasons: Dict[str, int]
    max_weyl_norm_sq: float
    shards: List[Tuple[int, int]]
    ascent_improvements: int
    wall_time: float
    rows: List[dict] = field(default_factory=list)
    generator: str = GENERATOR_NAME

    @property
    def accepted(self) -> int:
        return sum(self.case_histogram.values())

    def to_dict(self) -> dict:
        return {
            "config": self.config.model_dump(mode="json"),
            "generator": self.generator,
            "max_margin": self.max_margin,
            "argmax_index": self.argmax_index,
            "argmax": self.argmax.to_dict() if self.argmax else None,
            "case_histogram": dict(self.case_histogram),
            "rejected": self.rejected,
            "rejection_reasons": dict(self.rejection_reasons),
            "max_weyl_norm_sq": self.max_weyl_norm_sq,
            "shards": [list(s) for s in self.shards],
            "ascent_improvements": self.ascent_improvements,
            "wall_time": self.wall_time,
        }


def _evaluate_shard_args(args: Tuple[SearchConfig, int, int]) -> ShardResult:
    return evaluate_shard(*args)


def maximize_margin(config: SearchConfig) -> SearchReport:
    """
    Sample, evaluate and locally refine the Claim's margin.

    Finding no positive margin means only that no violation was found at
    this budget.

    Args:
        config: Search parameters

    Returns:
        SearchReport with the largest margin and the sample statistics
    """
    started = time.perf_counter()
    bounds = shard_bounds(config.samples, config.workers)
    logger.info(
        f"Searching {config.samples} {config.family.value} samples in {len(bounds)} shard(s), seed {config.seed}"
    )

    if len(bounds) == 1:
        results = [evaluate_shard(config, *bounds[0])]
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_evaluate_shard_args, [(config, lo, hi) for lo, hi in bounds]))
    merged = reduce(merge_shards, results)

    best = merged.best
    improvements = 0
    for margin, index in _keep_top(merged.top, config.restarts):
        point = sample_point(
            config.family,
            config.seed,
            index,
            h_range=config.h_range,
            m_max=config.m_max,
            strict_lcf=config.strict_lcf,
            max_attempts=config.max_attempts,
        )
        report = local_ascent(point, config)
        if report is not None and report.margin > best[0]:
            best = (report.margin, index, report)
            improvements += 1

    rejected = sum(merged.rejected.values())
    search = SearchReport(
        config=config,
        max_margin=best[0] if best else None,
        argmax=best[2] if best else None,
        argmax_index=best[1] if best else None,
        case_histogram=merged.histogram,
        rejected=rejected,
        rejection_reasons=merged.rejected,
        max_weyl_norm_sq=merged.max_weyl_norm_sq,
        shards=bounds,
        ascent_improvements=improvements,
        wall_time=time.perf_counter() - started,
        rows=merged.rows,
    )
    if search.max_margin is not None and search.max_margin > 0:
        logger.warning(f"Positive margin {search.max_margin:.6e} at sample {search.argmax_index}")
    logger.info(
        f"Search done: max margin {search.max_margin}, {rejected} rejected, {improvements} ascent improvements"
    )
    return search


