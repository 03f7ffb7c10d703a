"""Exception hierarchy shared by every subpackage.

All errors derive from ``ValueError`` so callers that only care about bad
input can keep catching the builtin.
"""


class CurvGaugeError(ValueError):
    """Base class for every error raised by curvgauge."""


class ShapeError(CurvGaugeError):
    """Component table has the wrong shape or non-finite entries."""


class BianchiViolation(CurvGaugeError):
    """First Bianchi identity fails after symmetrization."""


class DimensionError(CurvGaugeError):
    """Operation is undefined in the tensor's dimension."""


class DimensionMismatch(CurvGaugeError):
    """Two operands live in different dimensions."""


class FrameError(CurvGaugeError):
    """Vectors are not orthonormal."""


class FrameMismatch(CurvGaugeError):
    """Ambient data and spectrum are not given in the same frame."""


class DomainError(CurvGaugeError):
    """Parameter outside the warping function's domain."""


class ConstraintError(CurvGaugeError):
    """Input violates an algebraic constraint (trace, norm bound, ...)."""


class NotAdmissible(CurvGaugeError):
    """Ambient sectional curvature leaves [0, 1]."""


class NotLCF(CurvGaugeError):
    """Induced metric is not locally conformally flat within tolerance."""


class NotAdmissibleForRotsym(CurvGaugeError):
    """Warped-product curvatures violate 0 <= kappa1 <= kappa2 <= 1."""


class UnclassifiableError(CurvGaugeError):
    """Spectrum fits none of the case patterns (internal consistency failure)."""
