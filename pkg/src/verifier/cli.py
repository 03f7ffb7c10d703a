"""
Command-line driver.

Exit status:
 0  every check passed
 1  at least one check failed (the report is still written)
 2  usage error or invalid input
 3  the report could not be read or written
"""

import argparse
import logging
import sys
import time
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

from pydantic import ValidationError

from src import __version__
from src.errors import CurvGaugeError
from src.search.config import SearchConfig
from src.search.epsilon import epsilon0_threshold
from src.search.sampling import SearchFamily
from src.utils.settings import VerifierSettings
from src.verifier.checks import CheckLedger
from src.verifier.report import VerificationReport, load_report, write_report
from src.verifier.suites import (
    claim_search,
    epsilon0_suite,
    identities_suite,
    lemma_suite,
    rotsym_suite,
    slice_suite,
)
from src.warped.presets import preset_from_name

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=non_negative_int, default=None, help="Run seed (default: CURVGAUGE_SEED or 7)")
    common.add_argument("--out", type=Path, default=None, help="Write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default="json", help="Report format")
    common.add_argument("--workers", type=positive_int, default=None, help="Worker processes")
    common.add_argument("-v", "--verbose", action="count", default=0, help="More logging")

    parser = argparse.ArgumentParser(
        prog="curvgauge",
        description="Numerical verification of curvature inequalities for hypersurfaces.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("identities", parents=[common], help="Tensor and decomposition identities")
    p.add_argument("--samples", type=positive_int, default=1000)

    p = sub.add_parser("claim-search", parents=[common], help="Search for a violation of the pointwise Claim")
    p.add_argument("--family", choices=[f.value for f in SearchFamily], default=SearchFamily.WARPED.value)
    p.add_argument("--samples", type=positive_int, default=10_000)
    p.add_argument("--h-max", type=float, default=2.0, help="Sample H in [-h-max, h-max]")
    p.add_argument("--restarts", type=non_negative_int, default=8, help="Local ascents from the best samples")
    p.add_argument(
        "--strict",
        action="store_true",
        help="Require the full Weyl tensor to vanish and every sampled 2-plane sectional to lie in [0, 1]",
    )
    p.add_argument("--small-h", action="store_true", help="Restrict |H| to eps0 and use the bare bound")
    p.add_argument("--bare-bound", action="store_true", help="Compare against 3(1+H^2)^2")

    sub.add_parser("epsilon0", parents=[common], help="Derive the small-|H| threshold")

    p = sub.add_parser("rotsym", parents=[common], help="Inequality chain over warped ambients")
    p.add_argument("--samples", type=positive_int, default=1000)

    p = sub.add_parser("lemma", parents=[common], help="Conformal flatness of pattern spectra")
    p.add_argument("--samples", type=positive_int, default=1000)

    p = sub.add_parser("slice", parents=[common], help="Integrals over a level-set slice")
    p.add_argument("--phi", default="sin", help="sin | const1 | cosh | poly:c0,c1,...")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--monte-carlo", action="store_true")
    p.add_argument("--mc-samples", type=positive_int, default=100_000)

    p = sub.add_parser("report", parents=[common], help="Re-render a saved JSON report")
    p.add_argument("--in", dest="in_path", type=Path, required=True)

    return parser


def _search_config(args: argparse.Namespace, seed: int, workers: int, settings: VerifierSettings) -> SearchConfig:
    h_max = args.h_max
    bare = args.bare_bound
    if args.small_h:
        h_max = min(h_max, epsilon0_threshold().root)
        bare = True
    return SearchConfig(
        family=SearchFamily(args.family),
        samples=args.samples,
        restarts=args.restarts,
        seed=seed,
        lcf_tol=settings.lcf_tol,
        penalty_weight=settings.penalty_weight,
        h_range=(-h_max, h_max),
        strict_lcf=args.strict,
        strict_admissible=args.strict,
        bare_bound=bare,
        ascent_iterations=settings.ascent_iterations,
        workers=workers,
        collect_rows=args.format == "csv",
    )


def execute(
    args: argparse.Namespace, settings: VerifierSettings
) -> Tuple[Dict[str, Any], CheckLedger, List[Dict[str, Any]]]:
    """Run one verification subcommand; returns (config, ledger, rows)."""
    seed = settings.seed if args.seed is None else args.seed
    workers = settings.workers if args.workers is None else args.workers
    ledger = CheckLedger()
    rows: List[Dict[str, Any]] = []
    config: Dict[str, Any] = {"seed": seed}

    if args.command == "identities":
        config["samples"] = args.samples
        identities_suite(ledger, args.samples, seed, settings)
    elif args.command == "claim-search":
        search_config = _search_config(args, seed, workers, settings)
        config = search_config.model_dump(mode="json")
        search = claim_search(ledger, search_config, settings)
        summary = search.to_dict()
        summary.pop("wall_time")
        summary.pop("config")
        ledger.add_finding("search.summary", summary, "no positive margin means no violation found at this budget")
        rows = search.rows
    elif args.command == "epsilon0":
        epsilon0_suite(ledger, settings)
    elif args.command == "rotsym":
        config["samples"] = args.samples
        rotsym_suite(ledger, args.samples, seed, settings)
    elif args.command == "lemma":
        config["samples"] = args.samples
        lemma_suite(ledger, args.samples, seed, settings)
    elif args.command == "slice":
        preset = preset_from_name(args.phi)
        config.update(phi=preset.name, t=args.t, monte_carlo=args.monte_carlo, mc_samples=args.mc_samples)
        slice_suite(ledger, preset, args.t, settings, args.monte_carlo, args.mc_samples, seed)
    else:
        raise ValueError(f"Unknown command {args.command!r}")
    return config, ledger, rows


def _emit(report: VerificationReport, args: argparse.Namespace, echo: Callable[[str], None]) -> None:
    text = write_report(report, args.format, args.out)
    if args.out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    for check in report.checks:
        echo(check.summary_line())


def run(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv``, run the subcommand and write its report; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        settings = VerifierSettings()
    except ValidationError as exc:
        print(f"curvgauge: invalid settings: {exc}", file=sys.stderr)
        return EXIT_USAGE

    level = logging.DEBUG if args.verbose > 1 else logging.INFO if args.verbose else settings.log_level
    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)

    # Summaries must not interleave with a report printed to stdout
    def echo(line: str) -> None:
        print(line, file=sys.stderr if args.out is None else sys.stdout)

    try:
        if args.command == "report":
            report = load_report(args.in_path)
        else:
            started = time.perf_counter()
            config, ledger, rows = execute(args, settings)
            report = VerificationReport.from_ledger(
                args.command, config, ledger, time.perf_counter() - started, rows
            )
        _emit(report, args, echo)
    except (CurvGaugeError, ValidationError) as exc:
        if isinstance(exc, ValidationError) and args.command == "report":
            logger.error(f"{args.in_path} is not a verification report: {exc}")
            return EXIT_IO
        logger.error(f"{args.command}: {exc}")
        return EXIT_USAGE
    except OSError as exc:
        logger.error(f"{args.command}: {exc}")
        return EXIT_IO

    summary = report.summary or {}
    logger.info(f"{args.command}: {summary.get('passed', 0)}/{summary.get('total', 0)} checks passed")
    return EXIT_OK if report.passed else EXIT_FAILED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
