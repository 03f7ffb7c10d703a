"""Tests for slice integrals of warped products."""

import numpy as np
import pytest

from src.curvature import constant_curvature
from src.errors import DimensionError, DomainError
from src.slices import VOL_S4, gbc_integrand, integrate_slice, monte_carlo_sphere_integral, slice_hypersurface
from src.warped import const1_preset, cosh_preset, sin_preset


class TestSliceHypersurface:
    """Tests for the level-set geometry."""

    def test_equator_of_round_sphere(self):
        """Test the equator of S^5 is a totally geodesic unit S^4."""
        geometry = slice_hypersurface(sin_preset(), np.pi / 2)
        assert geometry.mean_curvature == pytest.approx(0.0, abs=1e-15)
        assert geometry.intrinsic_sec == pytest.approx(1.0)
        assert geometry.volume == pytest.approx(8 * np.pi**2 / 3)
        assert geometry.volume == pytest.approx(26.3189, abs=1e-4)

    def test_latitude_sphere(self):
        """Test t = pi/4 gives H = 1 and sectional 2."""
        geometry = slice_hypersurface(sin_preset(), np.pi / 4)
        assert geometry.mean_curvature == pytest.approx(1.0)
        assert geometry.intrinsic_sec == pytest.approx(2.0)
        assert geometry.induced.comp[0, 1, 0, 1] == pytest.approx(2.0)

    def test_outside_domain(self):
        """Test slices outside the preset's domain are refused."""
        with pytest.raises(DomainError):
            slice_hypersurface(sin_preset(), 4.0)


class TestGbcIntegrand:
    """Tests for the Gauss-Bonnet-Chern integrand."""

    @pytest.mark.parametrize("c", [0.0, 0.5, 1.0, 2.0])
    def test_constant_curvature(self, c):
        """Test constant curvature c gives 3 c^2."""
        assert gbc_integrand(constant_curvature(4, c)) == pytest.approx(3 * c**2, abs=1e-12)

    def test_requires_dimension_four(self):
        """Test other dimensions raise DimensionError."""
        with pytest.raises(DimensionError):
            gbc_integrand(constant_curvature(3, 1.0))


class TestIntegrateSlice:
    """Tests for the integrals over a slice."""

    @pytest.mark.parametrize("t", [np.pi / 2, np.pi / 4, 1.0])
    def test_round_sphere_slices_are_equality_cases(self, t):
        """Test every slice of S^5 has chi = 2 and zero slack."""
        report = integrate_slice(slice_hypersurface(sin_preset(), t))
        assert report.gbc_integral == pytest.approx(8 * np.pi**2)
        assert report.euler_number == 2.0
        assert report.slack == pytest.approx(0.0, abs=1e-9)

    def test_cylinder(self):
        """Test slices of R x S^4 are unit spheres with zero slack."""
        report = integrate_slice(slice_hypersurface(const1_preset(), 0.7))
        assert report.euler_number == 2.0
        assert report.volume_functional == pytest.approx(VOL_S4)
        assert report.slack == pytest.approx(0.0, abs=1e-9)

    def test_cosh_has_positive_slack(self):
        """Test kappa2 < 1 away from t = 0 leaves positive slack."""
        report = integrate_slice(slice_hypersurface(cosh_preset(), 1.0))
        assert report.euler_number == 2.0
        assert report.slack > 0
        assert report.volume_functional == pytest.approx(np.cosh(2.0) ** 2 * VOL_S4)

    def test_monte_carlo_agrees(self):
        """Test the sampled integral matches the analytic one."""
        report = integrate_slice(slice_hypersurface(sin_preset(), 1.2), monte_carlo=True, samples=1000, seed=3)
        assert report.method == "monte_carlo"
        assert report.mc_samples == 1000
        assert report.mc_agrees is True
        assert report.to_dict()["mc_agrees"] is True

    def test_analytic_has_no_estimate(self):
        """Test the analytic path leaves the Monte Carlo fields empty."""
        report = integrate_slice(slice_hypersurface(sin_preset(), 1.2))
        assert report.mc_estimate is None
        assert report.mc_agrees is None


class TestMonteCarlo:
    """Tests for uniform sampling of S^4."""

    def test_constant_function(self):
        """Test a constant integrates to constant times volume."""
        estimate, stderr = monte_carlo_sphere_integral(lambda x: np.ones(x.shape[0]), 2.0, 100, seed=1)
        assert estimate == pytest.approx(VOL_S4 * 16)
        assert stderr == pytest.approx(0.0, abs=1e-12)

    def test_coordinate_square(self):
        """Test the integral of x1^2 over the unit S^4 is Vol/5."""
        estimate, stderr = monte_carlo_sphere_integral(lambda x: x[:, 0] ** 2, 1.0, 100_000, seed=2)
        assert estimate == pytest.approx(VOL_S4 / 5, rel=2e-2)
        assert stderr > 0

    def test_needs_two_samples(self):
        """Test fewer than two samples is refused."""
        with pytest.raises(ValueError):
            monte_carlo_sphere_integral(lambda x: x[:, 0], 1.0, 1, seed=0)
