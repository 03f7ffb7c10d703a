"""Slice hypersurfaces, the Gauss-Bonnet-Chern integrand and the volume functional."""

from .integrals import (
    VOL_S4,
    IntegralReport,
    SliceGeometry,
    gbc_integrand,
    integrate_slice,
    monte_carlo_sphere_integral,
    slice_hypersurface,
)

__all__ = [
    "VOL_S4",
    "IntegralReport",
    "SliceGeometry",
    "gbc_integrand",
    "integrate_slice",
    "monte_carlo_sphere_integral",
    "slice_hypersurface",
]
