"""Check ledger, suites, reports and the command-line driver."""

from src.verifier.checks import CheckLedger, CheckResult, Finding, clean, finite_or_none
from src.verifier.cli import build_parser, run
from src.verifier.report import VerificationReport, load_report, write_report
from src.verifier.suites import (
    claim_search,
    epsilon0_suite,
    identities_suite,
    lemma_suite,
    rotsym_suite,
    slice_suite,
)

__all__ = [
    "CheckLedger",
    "CheckResult",
    "Finding",
    "clean",
    "finite_or_none",
    "build_parser",
    "run",
    "VerificationReport",
    "load_report",
    "write_report",
    "claim_search",
    "epsilon0_suite",
    "identities_suite",
    "lemma_suite",
    "rotsym_suite",
    "slice_suite",
]
