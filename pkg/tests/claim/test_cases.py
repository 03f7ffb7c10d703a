"""Tests for the proof's case split."""

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from src.claim import (
    CaseLabel,
    classify_case,
    classify_spectrum,
    flip_label,
    flip_orientation,
    oriented_mean,
    shape_spectrum,
)
from src.claim.cases import umbilicity_threshold
from src.errors import FrameMismatch

principal_lists = st.lists(st.floats(min_value=-5, max_value=5), min_size=4, max_size=4)


class TestClassifyCase:
    """Tests for case labels."""

    @pytest.mark.parametrize("h", [-1.0, 0.0, 2.0])
    def test_umbilic_is_case_one(self, unit_ambient, h):
        """Test mu = 0 is case I for any H."""
        assert classify_case(unit_ambient, shape_spectrum([h] * 4)) is CaseLabel.I

    def test_pattern_norm(self):
        """Test (3m, -m, -m, -m), m = 1.2 has |A0|^2 = 17.28, above the H = 0 threshold."""
        m = 1.2
        spec = shape_spectrum([3 * m, -m, -m, -m])
        assert spec.a_norm_sq == pytest.approx(17.28)
        assert spec.a_norm_sq > umbilicity_threshold(0.0)

    def test_one_positive_three_negative(self, unit_ambient):
        """Test (3m, -m, -m, -m), m = 1.25 is case IIc."""
        m = 1.25
        spec = shape_spectrum([3 * m, -m, -m, -m])
        assert spec.mean_curvature == 0.0
        assert classify_case(unit_ambient, spec) is CaseLabel.IIC

    def test_three_positive_one_negative(self, unit_ambient):
        """Test (m, m, m, -3m), m = 1.25 is case IIb."""
        m = 1.25
        assert classify_case(unit_ambient, shape_spectrum([m, m, m, -3 * m])) is CaseLabel.IIB

    def test_two_positive_two_negative(self, unit_ambient):
        """Test (3, 3, -3, -3) is case IIa."""
        assert classify_case(unit_ambient, shape_spectrum([3.0, 3.0, -3.0, -3.0])) is CaseLabel.IIA

    def test_zero_eigenvalue_routes_to_iia(self, unit_ambient):
        """Test a zero traceless eigenvalue with K = 0 is case IIa."""
        assert classify_case(unit_ambient, shape_spectrum([4.0, 0.0, 0.0, -4.0])) is CaseLabel.IIA

    def test_boundary_belongs_to_case_one(self):
        """Test |A0|^2 = 12 + 24 H^2 exactly is case I."""
        # mu = (3, -1, -1, -1) has |A0|^2 = 12 = threshold at H = 0
        spec = shape_spectrum([3.0, -1.0, -1.0, -1.0])
        assert spec.a_norm_sq == umbilicity_threshold(0.0)
        assert classify_spectrum(spec) is CaseLabel.I

    def test_negative_h_is_normalized(self):
        """Test H < 0 is classified after flipping the normal."""
        # lambda = (-m, -m, -m, 3m) - 1: flipping gives (m, m, m, -3m) + 1, case IIb
        m = 3.0
        spec = shape_spectrum([-m - 1, -m - 1, -m - 1, 3 * m - 1])
        assert spec.mean_curvature < 0
        assert classify_spectrum(spec) is CaseLabel.IIB

    def test_frame_mismatch(self, unit_ambient):
        """Test spectra of another dimension are refused."""
        with pytest.raises(FrameMismatch):
            classify_case(unit_ambient, shape_spectrum([0.0] * 5))


class TestFlipLabel:
    """Tests for orientation equivariance of the labels."""

    def test_label_set(self):
        """Test the case split has exactly four labels."""
        assert [label.value for label in CaseLabel] == ["I", "IIa", "IIb", "IIc"]

    def test_swap_at_zero_mean_curvature(self):
        """Test IIb and IIc trade places when H = 0."""
        assert flip_label(CaseLabel.IIB, 0.0) is CaseLabel.IIC
        assert flip_label(CaseLabel.IIC, 0.0) is CaseLabel.IIB
        assert flip_label(CaseLabel.IIA, 0.0) is CaseLabel.IIA

    def test_identity_away_from_zero(self):
        """Test labels survive the flip when H != 0."""
        for label in CaseLabel:
            assert flip_label(label, 0.5) is label

    def test_pattern_at_zero(self):
        """Test the flipped IIc pattern is IIb."""
        spec = shape_spectrum([6.0, -2.0, -2.0, -2.0])
        assert classify_spectrum(flip_orientation(spec)) is CaseLabel.IIB

    @pytest.mark.parametrize("delta", [-1e-15, 0.0, 1e-15])
    def test_rounding_in_mean_keeps_label(self, delta):
        """Test a mean curvature at rounding level neither flips the normal nor the label."""
        spec = shape_spectrum([6.0, -2.0, -2.0, -2.0 + delta])
        assert abs(spec.mean_curvature) < 1e-12
        assert oriented_mean(spec) == 0.0
        assert classify_spectrum(spec) is CaseLabel.IIC
        assert classify_spectrum(flip_orientation(spec)) is CaseLabel.IIB

    def test_oriented_mean_keeps_real_values(self):
        """Test a genuine mean curvature passes through unchanged."""
        spec = shape_spectrum([1e-6, 0.0, 0.0, 0.0])
        assert oriented_mean(spec) == spec.mean_curvature

    @settings(deadline=None, max_examples=100)
    @given(lam=principal_lists)
    def test_equivariance(self, lam):
        """Property test: the flipped point classifies to the flipped label."""
        spec = shape_spectrum(lam)
        # Rounding decides the side of a tie, not the geometry
        assume(spec.mean_curvature == 0.0 or abs(spec.mean_curvature) > 1e-9)
        assume(abs(spec.a_norm_sq - umbilicity_threshold(spec.mean_curvature)) > 1e-9)
        assume(flip_orientation(spec).mean_curvature == -spec.mean_curvature)
        label = classify_spectrum(spec)
        assert classify_spectrum(flip_orientation(spec)) is flip_label(label, oriented_mean(spec))
