"""Tests for the verification suites."""

import numpy as np
import pytest

from src.search import SearchConfig, SearchFamily
from src.verifier import (
    CheckLedger,
    claim_search,
    epsilon0_suite,
    identities_suite,
    lemma_suite,
    rotsym_suite,
    slice_suite,
)
from src.warped import cosh_preset, preset_from_name, sin_preset


def _names(ledger):
    return {r.name for r in ledger.results}


class TestIdentitiesSuite:
    """Tests for the identity suite."""

    def test_small_run_passes(self, settings):
        """Test every identity and proof step holds on a small sample."""
        ledger = CheckLedger()
        identities_suite(ledger, 30, 3, settings)
        assert ledger.all_passed, [r.summary_line() for r in ledger.get_failed()]
        assert {"claim.decomposition", "proof.q3", "symmetry.case_equivariance"} <= _names(ledger)

    def test_deterministic(self, settings):
        """Test the same seed gives the same worst residuals."""
        a, b = CheckLedger(), CheckLedger()
        identities_suite(a, 10, 5, settings)
        identities_suite(b, 10, 5, settings)
        assert [r.worst_residual for r in a.results] == [r.worst_residual for r in b.results]


class TestWarpedSuites:
    """Tests for the lemma and rotsym suites."""

    def test_lemma(self, settings):
        """Test pattern points are conformally flat and non-pattern points are not."""
        ledger = CheckLedger()
        lemma_suite(ledger, 25, 2, settings)
        assert ledger.all_passed, [r.summary_line() for r in ledger.get_failed()]
        assert "lemma.pattern_weyl_vanishes" in _names(ledger)

    def test_rotsym(self, settings):
        """Test the chain holds and the printed identity is reported as a finding."""
        ledger = CheckLedger()
        rotsym_suite(ledger, 25, 2, settings)
        assert ledger.all_passed, [r.summary_line() for r in ledger.get_failed()]
        assert [f.name for f in ledger.findings] == ["rotsym.printed_identity"]


class TestClaimSearch:
    """Tests for the search suite."""

    def test_warped(self, settings):
        """Test a warped search records accounting, margin and Weyl exactness."""
        ledger = CheckLedger()
        report = claim_search(ledger, SearchConfig(samples=20, seed=1), settings)
        assert ledger.all_passed
        assert _names(ledger) == {"search.accounting", "search.max_margin", "search.warped_weyl_exact"}
        witness = next(r for r in ledger.results if r.name == "search.max_margin").witness
        assert witness["index"] == report.argmax_index

    def test_general_prefix(self, settings):
        """Test the general family skips the warped-only check."""
        ledger = CheckLedger()
        config = SearchConfig(family=SearchFamily.GENERAL, samples=10, seed=1, h_range=(-0.1, 0.1), bare_bound=True)
        claim_search(ledger, config, settings, prefix="small_h")
        assert "small_h.warped_weyl_exact" not in _names(ledger)
        assert "small_h.accounting" in _names(ledger)


class TestEpsilon0Suite:
    """Tests for the eps0 suite."""

    def test_records_printed_value(self, settings):
        """Test the closed form passes and the printed value is a finding."""
        ledger = CheckLedger()
        epsilon0_suite(ledger, settings)
        assert ledger.all_passed
        finding = ledger.findings[0]
        assert finding.name == "epsilon0.printed_value"
        assert finding.value["factor"] == pytest.approx(46.0)


class TestSliceSuite:
    """Tests for the slice suite."""

    def test_equator(self, settings):
        """Test the equator of S^5 passes with zero slack."""
        ledger = CheckLedger()
        slice_suite(ledger, sin_preset(), np.pi / 2, settings)
        assert ledger.all_passed
        assert "slice.slack_nonnegative" in _names(ledger)

    def test_round_sphere_grid(self, settings):
        """Test every slice of S^5 asserts the slack rather than skipping it."""
        for t in np.linspace(0.1, 3.0, 30):
            ledger = CheckLedger()
            slice_suite(ledger, sin_preset(), t, settings)
            assert "slice.slack_nonnegative" in _names(ledger), t
            assert ledger.all_passed, t

    def test_monte_carlo(self, settings):
        """Test the Monte Carlo agreement check is recorded on request."""
        ledger = CheckLedger()
        slice_suite(ledger, cosh_preset(), 0.5, settings, monte_carlo=True, mc_samples=500, seed=4)
        assert ledger.all_passed
        assert "slice.monte_carlo_agreement" in _names(ledger)

    def test_outside_hypothesis(self, settings):
        """Test kappa2 > 1 turns the slack check into a finding."""
        ledger = CheckLedger()
        slice_suite(ledger, preset_from_name("poly:0.5"), 0.0, settings)
        assert "slice.slack_nonnegative" not in _names(ledger)
        assert "slice.outside_hypothesis" in [f.name for f in ledger.findings]
        assert ledger.all_passed
