"""Tests for the seeded sample families and the flatness projections."""

import numpy as np
import pytest
from pydantic import ValidationError

from src.claim import CaseLabel, classify_spectrum, principal_weyl, shape_spectrum
from src.claim.cases import umbilicity_threshold
from src.curvature import (
    AmbientRestriction,
    constant_curvature,
    gauss_induced,
    invariants,
    random_admissible_ambient,
    sectional_tensor,
)
from src.search import (
    SearchConfig,
    SearchFamily,
    project_full_lcf,
    project_principal_lcf,
    realize_warped,
    repair_admissibility,
    sample_point,
)
from src.search.sampling import MAX_ATTEMPTS, _split_sign_traceless
from src.utils.rng import run_rng


class TestWarpedFamily:
    """Tests for warped samples."""

    def test_reproducible(self):
        """Test a sample is a function of (seed, index) alone."""
        a = sample_point(SearchFamily.WARPED, 7, 3)
        b = sample_point("warped", 7, 3)
        assert np.array_equal(a.params, b.params)
        assert np.array_equal(a.ambient.comp, b.ambient.comp)

    def test_samples_are_admissible_and_flat(self):
        """Test warped samples satisfy both hypotheses by construction."""
        for index in range(20):
            amb, spec = sample_point(SearchFamily.WARPED, 1, index)
            assert amb.is_admissible()
            assert invariants(gauss_induced(amb, spec.shape_operator())).weyl_norm_sq <= 1e-10

    def test_equality_point(self):
        """Test kappa = (1, 1), T = 0, m = 0 is the umbilic unit sphere."""
        amb, spec = realize_warped(np.array([1, 1, 0, 0, 0, 0, 0, 0.5]), 4, (-2.0, 2.0), 3.0)
        assert amb.to_tensor().allclose(constant_curvature(4, 1.0))
        assert spec.a_norm_sq == 0.0
        assert spec.mean_curvature == 0.5

    def test_cylinder_without_tangent(self):
        """Test kappa = (0, 1), T = 0 gives sigma = 12 and a = 3 Id."""
        amb, _ = realize_warped(np.array([0, 1, 0, 0, 0, 0, 1.0, 0.0]), 4, (-2.0, 2.0), 3.0)
        assert amb.sigma == pytest.approx(12.0)
        assert np.allclose(amb.a, 3 * np.eye(4))

    def test_parameters_are_clamped(self):
        """Test out-of-range parameters are mapped back into the family."""
        amb, spec = realize_warped(np.array([1.5, -0.2, 2.0, 0, 0, 0, 10.0, 5.0]), 4, (-1.0, 1.0), 3.0)
        assert amb.is_admissible()
        assert spec.mean_curvature == pytest.approx(1.0)
        assert max(abs(x) for x in spec.traceless) == pytest.approx(9.0)


class TestGeneralFamily:
    """Tests for general samples."""

    def test_principal_weyl_vanishes(self):
        """Test every general sample is projected onto W_ijij = 0."""
        for index in range(10):
            point = sample_point(SearchFamily.GENERAL, 1, index)
            induced = gauss_induced(point.ambient, point.spectrum.shape_operator())
            assert np.max(np.abs(principal_weyl(induced))) <= 1e-9
            assert 1 <= point.attempts <= MAX_ATTEMPTS
            assert point.ambient.is_admissible() or point.attempts == MAX_ATTEMPTS

    def test_split_sign_draw(self, rng):
        """Test split-sign draws are traceless (+, +, -, -) outside the umbilic ball."""
        threshold = umbilicity_threshold(2.0)
        for _ in range(20):
            mu = _split_sign_traceless(rng, threshold)
            assert np.sum(mu) == pytest.approx(0.0, abs=1e-12)
            assert mu[0] > 0 and mu[1] > 0 and mu[2] < 0 and mu[3] < 0
            assert 1.1 * threshold - 1e-9 <= np.sum(mu**2) <= 3.0 * threshold + 1e-9

    def test_draws_reach_split_sign_case(self):
        """Test first draws of the general family include IIa spectra."""
        labels = {
            classify_spectrum(sample_point(SearchFamily.GENERAL, 3, index, max_attempts=1).spectrum)
            for index in range(100)
        }
        assert CaseLabel.IIA in labels

    def test_strict_projection(self):
        """Test strict samples have vanishing full Weyl tensor."""
        point = sample_point(SearchFamily.GENERAL, 1, 0, strict_lcf=True)
        induced = gauss_induced(point.ambient, point.spectrum.shape_operator())
        assert invariants(induced).weyl_norm_sq <= 1e-16


class TestProjections:
    """Tests for the flatness projections and the admissibility repair."""

    @pytest.fixture
    def point(self):
        gen = run_rng(9)
        return random_admissible_ambient(gen), shape_spectrum(gen.normal(size=4))

    def test_principal_projection(self, point):
        """Test one projection zeroes the six W_ijij."""
        amb, spec = point
        projected = project_principal_lcf(amb, spec)
        assert np.max(np.abs(principal_weyl(gauss_induced(projected, spec.shape_operator())))) <= 1e-12

    def test_full_projection(self, point):
        """Test the strict projection zeroes the whole Weyl tensor."""
        amb, spec = point
        projected = project_full_lcf(amb, spec)
        assert invariants(gauss_induced(projected, spec.shape_operator())).weyl_norm_sq <= 1e-20

    def test_repair_keeps_admissible_input(self, unit_ambient):
        """Test an admissible ambient is returned as is."""
        assert repair_admissibility(unit_ambient) is unit_ambient

    def test_repair_shifts_into_range(self):
        """Test sectional curvature 1.2 is shifted into [0, 1] without touching W."""
        amb = AmbientRestriction.from_tensor(constant_curvature(4, 1.2))
        repaired = repair_admissibility(amb)
        assert repaired is not None
        assert repaired.is_admissible()
        assert invariants(repaired.to_tensor()).weyl_norm_sq <= 1e-20

    def test_repair_preserves_weyl(self, point):
        """Test the repair shift has no Weyl part."""
        amb, _ = point
        values = np.zeros((4, 4))
        values[0, 1] = 0.5
        shifted = amb.shifted(sectional_tensor(4, values))
        repaired = repair_admissibility(shifted)
        if repaired is not None:
            before = invariants(shifted.to_tensor()).weyl
            after = invariants(repaired.to_tensor()).weyl
            assert np.allclose(before, after, atol=1e-12)

    def test_repair_infeasible(self):
        """Test R_1212 = R_3434 = 2 with the other sectionals 0 cannot be repaired."""
        values = np.zeros((4, 4))
        values[0, 1] = values[2, 3] = 2.0
        amb = AmbientRestriction.from_tensor(sectional_tensor(4, values))
        assert repair_admissibility(amb) is None


class TestSearchConfig:
    """Tests for validated search parameters."""

    def test_defaults(self):
        """Test the default configuration."""
        config = SearchConfig(samples=10)
        assert config.family is SearchFamily.WARPED
        assert config.h_range == (-2.0, 2.0)

    @pytest.mark.parametrize(
        "kwargs",
        [{"samples": 0}, {"samples": 5, "h_range": (1.0, -1.0)}, {"samples": 5, "h_range": (0.0, float("inf"))}],
    )
    def test_invalid(self, kwargs):
        """Test bad sample counts and H ranges are rejected."""
        with pytest.raises(ValidationError):
            SearchConfig(**kwargs)
