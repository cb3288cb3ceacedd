"""Exception types shared across the library."""

from __future__ import annotations


class MonalgError(Exception):
    """Base class for all library-specific errors."""


class StructureError(MonalgError):
    """Malformed algebra data: indices out of range, conflicting entries."""


class FrameError(MonalgError):
    """A frame violates linear independence, surjectivity, or shape rules."""


class SingularElementError(MonalgError):
    """An element is not invertible.

    Carries the idempotent-component values ``xi`` and the 1-based indices
    ``offending`` of the components that vanish.
    """

    def __init__(self, message, xi=None, offending=None):
        super().__init__(message)
        self.xi = None if xi is None else tuple(xi)
        self.offending = None if offending is None else tuple(offending)


class PoleError(MonalgError):
    """A scalar parameter collides with a spectral point or a contour."""

    def __init__(self, message, u=None, t=None):
        super().__init__(message)
        self.u = u
        self.t = t


class EmbracingError(MonalgError):
    """A curve fails the winding precondition of the integral formula."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class IntegrationError(MonalgError):
    """Integrand evaluation failed on a curve; carries the parameter value."""

    def __init__(self, message, tau=None):
        super().__init__(message)
        self.tau = tau


class SpecFormatError(MonalgError):
    """A configuration file could not be parsed or fails schema checks."""
