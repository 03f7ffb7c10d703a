"""Tests for warping presets."""

import numpy as np
import pytest

from src.errors import DomainError
from src.warped import (
    KappaPair,
    PresetId,
    const1_preset,
    cosh_preset,
    kappa,
    polynomial_preset,
    preset_from_name,
    sin_preset,
)


class TestPresets:
    """Tests for the closed-form warping functions."""

    @pytest.mark.parametrize("factory", [sin_preset, const1_preset, cosh_preset])
    def test_derivatives_match_finite_differences(self, factory):
        """Test phi' and phi'' agree with central differences."""
        assert factory().self_test(np.linspace(0.3, 2.8, 11)) <= 1e-6

    def test_polynomial_derivatives(self):
        """Test polynomial presets differentiate exactly."""
        preset = polynomial_preset([1.0, 0.0, 0.5, 0.1])
        assert preset.phi_dot(2.0) == pytest.approx(2.0 + 0.3 * 4.0)
        assert preset.phi_ddot(2.0) == pytest.approx(1.0 + 0.6 * 2.0)
        assert preset.self_test([-1.0, 0.0, 1.5]) <= 1e-6

    def test_self_test_catches_wrong_derivative(self):
        """Test a preset with a wrong derivative fails its self test."""
        good = sin_preset()
        bad = type(good)(
            PresetId.SIN, phi=good.phi, phi_dot=lambda t: 0.0, phi_ddot=good.phi_ddot, domain=good.domain
        )
        with pytest.raises(DomainError, match="deviate"):
            bad.self_test([1.0])

    def test_sin_domain_is_open(self):
        """Test the endpoints of (0, pi) are excluded."""
        preset = sin_preset()
        assert not preset.contains(0.0)
        assert not preset.contains(np.pi)
        assert preset.contains(1.0)


class TestPresetFromName:
    """Tests for preset name parsing."""

    @pytest.mark.parametrize("name", ["sin", "const1", "cosh", "SIN"])
    def test_named(self, name):
        """Test named presets resolve."""
        assert preset_from_name(name).name == name.lower()

    def test_polynomial(self):
        """Test poly:c0,c1,... builds a polynomial preset."""
        preset = preset_from_name("poly:1,0,0.5")
        assert preset.preset_id is PresetId.POLYNOMIAL
        assert preset.coefficients == (1.0, 0.0, 0.5)
        assert preset.phi(2.0) == pytest.approx(3.0)

    @pytest.mark.parametrize("name", ["tan", "poly:a,b", "poly:"])
    def test_invalid(self, name):
        """Test unknown names and bad coefficients raise DomainError."""
        with pytest.raises(DomainError):
            preset_from_name(name)


class TestKappa:
    """Tests for the curvatures of the warped ambient."""

    @pytest.mark.parametrize("t", [0.3, np.pi / 2, 2.5])
    def test_round_sphere(self, t):
        """Test phi = sin t gives kappa1 = kappa2 = 1."""
        k = kappa(sin_preset(), t)
        assert k.kappa1 == pytest.approx(1.0)
        assert k.kappa2 == pytest.approx(1.0)
        assert k.admissible_for_rotsym

    def test_round_sphere_grid(self):
        """Test every t in (0, pi) of the round sphere passes the rotsym condition."""
        for t in np.linspace(0.05, 3.1, 200):
            assert kappa(sin_preset(), t).admissible_for_rotsym, t

    def test_tolerance_is_small(self):
        """Test values beyond rounding still fail the rotsym condition."""
        assert not KappaPair(0.5, 1.0 + 1e-6).admissible_for_rotsym
        assert not KappaPair(-1e-6, 0.5).admissible_for_rotsym
        assert not KappaPair(0.6, 0.5).admissible_for_rotsym
        assert KappaPair(1.0, 1.0 + 1e-14).admissible_for_rotsym

    @pytest.mark.parametrize("t", [-3.0, 0.0, 7.0])
    def test_cylinder(self, t):
        """Test phi = 1 gives kappa1 = 0 and kappa2 = 1."""
        k = kappa(const1_preset(), t)
        assert (k.kappa1, k.kappa2) == (0.0, 1.0)
        assert k.delta == -1.0

    def test_cosh_at_zero(self):
        """Test phi = cosh t at 0 has kappa1 = -1 and fails the rotsym condition."""
        k = kappa(cosh_preset(), 0.0)
        assert k.kappa1 == pytest.approx(-1.0)
        assert k.kappa2 == pytest.approx(1.0)
        assert not k.admissible_for_rotsym

    def test_outside_domain(self):
        """Test t outside (0, pi) is refused for sin."""
        with pytest.raises(DomainError, match="domain"):
            kappa(sin_preset(), 4.0)

    def test_non_positive_phi(self):
        """Test phi(t) <= 0 is refused."""
        with pytest.raises(DomainError, match="positive"):
            kappa(polynomial_preset([-1.0]), 0.0)
