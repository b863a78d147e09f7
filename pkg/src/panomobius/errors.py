"""Exception types shared across the package.

Everything derives from GeometryError (itself a ValueError) so callers can
catch the whole family or individual conditions.
"""


class GeometryError(ValueError):
    """Base class for every domain/geometry failure in this package."""


class PoleProjectionError(GeometryError):
    """Stereographic projection evaluated at its pole (0, 0, 1)."""


class BehindCameraError(GeometryError):
    """Perspective projection of a direction at or behind the camera plane."""


class IdentityMapError(GeometryError):
    """Operation undefined for the identity map (e.g. its fixed points)."""


class NonPositiveScaleError(GeometryError):
    """A scaling factor that must be positive was zero or negative."""


class DomainError(GeometryError):
    """Input outside the domain of the requested projection."""


class OutOfImageError(GeometryError):
    """Plane point outside the projection's image; nothing maps there."""


class NotRepresentableError(DomainError):
    """Configuration outside what the projection pipeline can represent."""
