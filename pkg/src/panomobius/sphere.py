"""Unit-sphere coordinates and the elementary maps everything else composes.

Directions are array-likes of shape (..., 3); operations broadcast over
leading axes.  The camera looks down -z with y up, so azimuth grows to the
right (+x) and altitude upward (+y).  The stereographic pole sits at
(0, 0, 1), directly behind the view axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BehindCameraError, PoleProjectionError

# Default tolerance for this module's geometric checks.
EPS = 1e-9
# Distance to (0,0,1) below which a direction counts as the projection pole.
POLE_EPS = 1e-12


def unit_vector(v):
    """Normalize v (shape (..., 3)) to unit length; zero vectors are rejected."""
    v = np.asarray(v, dtype=float)
    n = np.linalg.norm(v, axis=-1, keepdims=True)
    if np.any(n == 0.0):
        raise ValueError("zero vector has no direction")
    return v / n


def from_spherical(azimuth, altitude):
    """Unit direction for (azimuth, altitude); azimuth 0 is straight ahead (-z)."""
    az = np.asarray(azimuth, dtype=float)
    alt = np.asarray(altitude, dtype=float)
    ca = np.cos(alt)
    return np.stack([np.sin(az) * ca, np.sin(alt), -np.cos(az) * ca], axis=-1)


def to_spherical(p):
    """(azimuth, altitude) of unit direction(s) p.

    Inverse of from_spherical.  At the poles (|altitude| = pi/2) the azimuth
    is meaningless and canonicalized to 0.
    """
    p = np.asarray(p, dtype=float)
    x, y, z = p[..., 0], p[..., 1], p[..., 2]
    az = np.arctan2(x, -z)
    alt = np.arcsin(np.clip(y, -1.0, 1.0))
    az = np.where(np.hypot(x, z) < POLE_EPS, 0.0, az)
    return az, alt


def stereographic(p):
    """Project p from the pole (0,0,1) to the complex plane: 2(x+iy)/(1-z).

    The shrink center (0,0,-1) maps to the origin.  Directions within
    POLE_EPS of the pole have no finite image and raise PoleProjectionError;
    the Mobius layer represents that point explicitly as infinity.
    """
    p = np.asarray(p, dtype=float)
    x, y, z = p[..., 0], p[..., 1], p[..., 2]
    d2 = x * x + y * y + (z - 1.0) ** 2
    if np.any(d2 < POLE_EPS * POLE_EPS):
        raise PoleProjectionError("direction at the projection pole (0,0,1)")
    return (2.0 * x + 2.0j * y) / (1.0 - z)


def inverse_stereographic(w):
    """Lift finite complex value(s) w back onto the unit sphere."""
    w = np.asarray(w, dtype=complex)
    u, v = w.real, w.imag
    s = u * u + v * v
    den = s + 4.0
    return np.stack([4.0 * u / den, 4.0 * v / den, (s - 4.0) / den], axis=-1)


def rotate_view(p, yaw, pitch):
    """Rotate world direction(s) into the camera frame of (yaw, pitch).

    Yaw turns about the vertical axis, then pitch about the camera's
    horizontal axis, so the viewed direction itself lands on the -z axis:
    rotate_view(from_spherical(yaw, pitch), yaw, pitch) = (0, 0, -1).
    """
    p = np.asarray(p, dtype=float)
    x, y, z = p[..., 0], p[..., 1], p[..., 2]
    cy, sy = math.cos(yaw), math.sin(yaw)
    cp, sp = math.cos(pitch), math.sin(pitch)
    x1 = cy * x + sy * z
    z1 = cy * z - sy * x
    y2 = cp * y + sp * z1
    z2 = cp * z1 - sp * y
    return np.stack([x1, y2, z2], axis=-1)


def rotate_view_inverse(p, yaw, pitch):
    """Undo rotate_view: send the -z axis back out to the (yaw, pitch) direction."""
    p = np.asarray(p, dtype=float)
    x, y, z = p[..., 0], p[..., 1], p[..., 2]
    cy, sy = math.cos(yaw), math.sin(yaw)
    cp, sp = math.cos(pitch), math.sin(pitch)
    y1 = cp * y - sp * z
    z1 = cp * z + sp * y
    x2 = cy * x - sy * z1
    z2 = cy * z1 + sy * x
    return np.stack([x2, y1, z2], axis=-1)


@dataclass(frozen=True)
class ViewState:
    """Camera state: direction, angular extent, and frame shape.

    fov is the azimuthal extent; the vertical extent follows from the aspect
    ratio through the tangent relation tan(fov_v/2) = tan(fov/2)/aspect
    (perspective-correct, unlike a linear angle ratio).  fov_max is the
    threshold beyond which the Mobius pipeline shrinks the scene; 60 degrees
    covers comfortable central vision and is the recommended default.
    """

    yaw: float = 0.0
    pitch: float = 0.0
    fov: float = math.radians(90.0)
    fov_max: float = math.radians(60.0)
    aspect: float = 4.0 / 3.0

    def __post_init__(self):
        if not 0.0 < self.fov < 2.0 * math.pi:
            raise ValueError(f"fov must be in (0, 2*pi) radians, got {self.fov}")
        if not 0.0 < self.fov_max < math.pi:
            raise ValueError(f"fov_max must be in (0, pi) radians, got {self.fov_max}")
        if not self.aspect > 0.0:
            raise ValueError(f"aspect must be positive, got {self.aspect}")

    @property
    def fov_vertical(self):
        return 2.0 * math.atan(math.tan(0.5 * self.fov) / self.aspect)


def perspective_project(p, view):
    """Pinhole image of camera-frame direction(s), scaled to the fov_max edge.

    p must already be rotated into the camera frame.  A direction fov_max/2
    off axis lands at |u| = 1; anything at or behind the camera plane
    (z >= -EPS) has no image.
    """
    p = np.asarray(p, dtype=float)
    x, y, z = p[..., 0], p[..., 1], p[..., 2]
    if np.any(z >= -EPS):
        raise BehindCameraError("direction at or behind the camera plane")
    t = math.tan(0.5 * view.fov_max)
    return np.stack([x / (-z) / t, y / (-z) / t], axis=-1)


def perspective_unproject(q, view):
    """Unit direction whose perspective_project is q; always in front."""
    q = np.asarray(q, dtype=float)
    t = math.tan(0.5 * view.fov_max)
    u = q[..., 0] * t
    v = q[..., 1] * t
    return unit_vector(np.stack([u, v, -np.ones_like(u)], axis=-1))
