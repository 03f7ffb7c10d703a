"""Tests for Q, its decomposition and the bound functions."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import brentq

from src.claim import bare_bound, claim_bound, f_profile, principal_weyl, q_decomposed, q_direct, shape_spectrum
from src.curvature import (
    AmbientRestriction,
    CurvatureTensor,
    ShapeOperator,
    constant_curvature,
    gauss_induced,
    random_algebraic_tensor,
)
from src.errors import ConstraintError, DimensionError, FrameMismatch
from src.utils.rng import run_rng

SQRT3 = np.sqrt(3.0)


class TestQDirect:
    """Tests for Q = S^2/12 - |Ric|^2/4."""

    @pytest.mark.parametrize("c", [0.0, 0.5, 1.0, 2.0])
    def test_constant_curvature(self, c):
        """Test Q = 3c^2 on space forms."""
        assert q_direct(constant_curvature(4, c)) == pytest.approx(3 * c * c)

    @pytest.mark.parametrize("h", [0.0, 0.5, 1.5])
    def test_umbilic_sphere(self, h):
        """Test Q = 3(1 + H^2)^2 for constant curvature 1 + H^2."""
        assert q_direct(constant_curvature(4, 1 + h * h)) == pytest.approx(3 * (1 + h * h) ** 2)

    def test_zero_tensor(self):
        """Test Q of the zero tensor."""
        assert q_direct(CurvatureTensor(4, np.zeros((4, 4, 4, 4)))) == 0.0

    def test_requires_dimension_four(self):
        """Test Q is refused in dimension 3."""
        with pytest.raises(DimensionError):
            q_direct(constant_curvature(3, 1.0))


class TestQDecomposed:
    """Tests for the expanded form of Q."""

    def test_umbilic_unit_sphere(self, unit_ambient):
        """Test sigma = 12, mu = 0 gives 3(1 + H^2)^2."""
        spec = shape_spectrum([0.4] * 4)
        assert q_decomposed(unit_ambient, spec) == pytest.approx(3 * (1 + 0.16) ** 2)

    def test_all_zero(self, flat_ambient):
        """Test flat ambient and zero shape operator give 0."""
        assert q_decomposed(flat_ambient, shape_spectrum([0.0] * 4)) == 0.0

    def test_matches_direct_on_admissible(self, admissible_ambients):
        """Test the decomposition agrees with Q of the Gauss-induced tensor."""
        gen = run_rng(42)
        for amb in admissible_ambients:
            spec = shape_spectrum(gen.normal(size=4) * 2)
            direct = q_direct(gauss_induced(amb, spec.shape_operator()))
            assert abs(q_decomposed(amb, spec) - direct) <= 1e-9

    @settings(deadline=None, max_examples=50)
    @given(seed=st.integers(min_value=0, max_value=2**31), scale=st.floats(min_value=0.0, max_value=3.0))
    def test_matches_direct_on_any_ambient(self, seed, scale):
        """Property test: the decomposition needs no admissibility."""
        gen = run_rng(seed)
        amb = AmbientRestriction.from_tensor(random_algebraic_tensor(gen, 4))
        spec = shape_spectrum(gen.normal(size=4) * scale)
        direct = q_direct(gauss_induced(amb, spec.shape_operator()))
        assert abs(q_decomposed(amb, spec) - direct) <= 1e-9 * max(1.0, abs(direct))

    def test_frame_mismatch(self, unit_ambient):
        """Test spectra of another dimension are refused."""
        with pytest.raises(FrameMismatch):
            q_decomposed(unit_ambient, shape_spectrum([0.0] * 3))


class TestClaimBound:
    """Tests for 3(1 + H^2)^2 + 3|H| f(|H|)."""

    def test_zero_mean_curvature(self):
        """Test H = 0 takes the first branch with x0 = sqrt(3) and bound 3."""
        bound = claim_bound(0.0)
        assert bound.branch == 1
        assert bound.x0 == pytest.approx(SQRT3)
        assert 3 * bound.f_of_h == pytest.approx(24.0)
        assert bound.bound == pytest.approx(3.0)

    def test_unit_mean_curvature(self):
        """Test H = 1 takes the second branch at x0 = 3 sqrt(3) + sqrt(24)."""
        bound = claim_bound(1.0)
        x0 = 3 * SQRT3 + np.sqrt(24.0)
        assert bound.branch == 2
        assert bound.x0 == pytest.approx(x0)
        assert bound.f_of_h == pytest.approx((SQRT3 / 3 * x0**3 - 0.5 * x0**2) / 3)
        assert bound.bound == pytest.approx(12 + 3 * bound.f_of_h)

    def test_continuous_at_branch_switch(self):
        """Test f and the bound agree on both sides of x0 = sqrt(12 + 24 H^2)."""
        hc = brentq(lambda h: 3 * SQRT3 * h + np.sqrt(3 + 21 * h * h) - np.sqrt(12 + 24 * h * h), 0.0, 1.0)
        assert hc == pytest.approx(0.298825, abs=1e-5)
        below, above = claim_bound(hc - 1e-7), claim_bound(hc + 1e-7)
        assert (below.branch, above.branch) == (1, 2)
        assert below.f_of_h == pytest.approx(above.f_of_h, rel=1e-5)
        assert below.bound == pytest.approx(above.bound, rel=1e-5)
        assert claim_bound(hc).f_of_h == pytest.approx(9.5317443, rel=1e-5)

    @settings(deadline=None, max_examples=50)
    @given(h=st.floats(min_value=0, max_value=10))
    def test_even_in_h(self, h):
        """Property test: the bound depends on |H| only and dominates 3(1 + H^2)^2."""
        assert claim_bound(h).bound == claim_bound(-h).bound
        assert claim_bound(h).bound >= bare_bound(h)

    def test_bare_bound(self):
        """Test the bare bound at H = 1."""
        assert bare_bound(1.0) == pytest.approx(12.0)


class TestFProfile:
    """Tests for F(|A0|) and its roots."""

    def test_reference_point(self):
        """Test F(sqrt(12), 0) = -3 with roots -/+ sqrt(6)."""
        profile = f_profile(np.sqrt(12.0), 0.0)
        assert profile.value == pytest.approx(-3.0)
        assert profile.eta1 == pytest.approx(-np.sqrt(6.0))
        assert profile.eta2 == pytest.approx(np.sqrt(6.0))
        assert profile.factorized(np.sqrt(12.0)) == pytest.approx(-3.0)

    @pytest.mark.parametrize("h", [0.0, 0.3, 2.0])
    def test_zero_at_origin(self, h):
        """Test F(0) = 0."""
        assert f_profile(0.0, h).value == 0.0

    def test_zero_at_eta2(self):
        """Test F vanishes at its positive root."""
        eta2 = f_profile(0.0, 0.3).eta2
        assert f_profile(eta2, 0.3).value == pytest.approx(0.0, abs=1e-12)

    @settings(deadline=None, max_examples=50)
    @given(x=st.floats(min_value=0, max_value=20), h=st.floats(min_value=-3, max_value=3))
    def test_factorization(self, x, h):
        """Property test: the polynomial equals its factorized form."""
        profile = f_profile(x, h)
        assert profile.value == pytest.approx(profile.factorized(x), rel=1e-9, abs=1e-9)

    def test_negative_norm(self):
        """Test |A0| < 0 is refused."""
        with pytest.raises(ConstraintError):
            f_profile(-1.0, 0.0)


class TestPrincipalWeyl:
    """Tests for the six W_ijij components."""

    def test_pattern_over_unit_sphere(self, unit_ambient):
        """Test the pattern spectrum is conformally flat over a space form."""
        induced = gauss_induced(unit_ambient, ShapeOperator(4, (2.0, 2.0, 2.0, -6.0)))
        assert np.max(np.abs(principal_weyl(induced))) < 1e-12

    def test_non_pattern(self, unit_ambient):
        """Test mu = (2, -2, 1, -1) gives W_1212 = -5/3."""
        induced = gauss_induced(unit_ambient, ShapeOperator(4, (2.0, -2.0, 1.0, -1.0)))
        assert principal_weyl(induced)[0] == pytest.approx(-5.0 / 3.0)
