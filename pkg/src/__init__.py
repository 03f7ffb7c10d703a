"""CurvGauge - numerical verification of curvature inequalities for hypersurfaces."""

__version__ = "0.1.0"
