"""The wide-angle projection pipeline and the reference projections.

The main act: rotate the viewing sphere so the viewed direction sits on the
shrink pole, pull the scene toward that pole with the conjugated radial map
M(z) = rho*z where rho = min(1, fov_max/fov), then project the shrunk sphere
through a pinhole.  Below the fov_max threshold this degenerates to plain
perspective, bit for bit.

Also here: perspective, stereographic, Mercator and Pannini projections under
the same ViewState conventions, each with an exact inverse for rendering, and
the flat key=value serialization shared by the CLI and the viewer vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BehindCameraError, DomainError, NotRepresentableError, OutOfImageError
from .mobius import hyperbolic_scaling, sphere_conjugate
from .sphere import (
    ViewState,
    from_spherical,
    inverse_stereographic,
    rotate_view,
    rotate_view_inverse,
    stereographic,
)

KINDS = ("mobius", "perspective", "stereographic", "mercator", "pannini")

# Behind-camera threshold for the pinhole stage.
EPS = 1e-9
# FOVs above this are rejected outright (the far end of the sphere wrapped
# around itself is striking but useless).
FOV_LIMIT = math.radians(355.0)
# Lower bound on the shrink factor: 1/240 (the strongest spec'd shrink) with
# a 1.5x safety margin.  Guards against configurations where the shrunk
# scene collapses into a numerically meaningless speck.
RHO_MIN = 1.0 / 360.0
# Mercator pole guard: altitudes this close to +-pi/2 have no image.
ALT_CAP = 0.5 * math.pi - 1e-9
# Cylindrical kinds reject directions this close to straight up/down.
POLE_GUARD = 1e-12
# ln tan(pi/4 + alt/2) at the altitude cap; |v|*fov/2 beyond this is outside.
MERC_V_CAP = math.log(math.tan(0.25 * math.pi + 0.5 * ALT_CAP))


def shrink_factor(fov, fov_max):
    """min(1, fov_max/fov): the coefficient of the radial shrink M(z) = rho*z."""
    if not 0.0 < fov < 2.0 * math.pi:
        raise DomainError(f"fov must be in (0, 2*pi) radians, got {fov}")
    if not 0.0 < fov_max < math.pi:
        raise DomainError(f"fov_max must be in (0, pi) radians, got {fov_max}")
    return min(1.0, fov_max / fov)


def _pannini_theta_max(d):
    # Largest azimuthal angle on the monotonic branch of u(theta).  For
    # d <= 1 this is also where the denominator d + cos(theta) dies.
    if d <= 1.0:
        return math.acos(-d)
    return math.acos(-1.0 / d)


@dataclass(frozen=True)
class ProjectionSpec:
    """A projection kind plus the ViewState it renders, validated up front."""

    kind: str
    view: ViewState
    pannini_d: float = 1.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown projection kind {self.kind!r}")
        fov = self.view.fov
        if self.kind == "mobius":
            if fov > FOV_LIMIT:
                raise NotRepresentableError(
                    f"fov {math.degrees(fov):g} deg exceeds the 355 deg limit"
                )
            if shrink_factor(fov, self.view.fov_max) < RHO_MIN:
                raise NotRepresentableError(
                    "shrink factor below 1/360; the result would be a speck"
                )
        elif self.kind == "perspective":
            if fov >= math.pi:
                raise DomainError("perspective cannot span a half turn or more")
        elif self.kind == "pannini":
            if not self.pannini_d >= 0.0:
                raise DomainError(f"pannini_d must be >= 0, got {self.pannini_d}")
            if 0.5 * fov >= _pannini_theta_max(self.pannini_d) - EPS:
                raise DomainError(
                    "fov reaches beyond the invertible range of this pannini_d"
                )


SPEC_KEYS = ("kind", "yaw_deg", "pitch_deg", "fov_deg", "fov_max_deg", "aspect", "pannini_d")


def spec_to_mapping(spec: ProjectionSpec) -> dict:
    """Flat key/value form of a spec (angles in degrees, values as text)."""
    v = spec.view
    return {
        "kind": spec.kind,
        "yaw_deg": format(math.degrees(v.yaw), ".17g"),
        "pitch_deg": format(math.degrees(v.pitch), ".17g"),
        "fov_deg": format(math.degrees(v.fov), ".17g"),
        "fov_max_deg": format(math.degrees(v.fov_max), ".17g"),
        "aspect": format(v.aspect, ".17g"),
        "pannini_d": format(spec.pannini_d, ".17g"),
    }


def spec_from_mapping(kv) -> ProjectionSpec:
    """Rebuild a spec from the flat key/value form; unknown keys are errors."""
    extra = set(kv) - set(SPEC_KEYS)
    if extra:
        raise ValueError(f"unknown spec keys: {sorted(extra)}")
    if "kind" not in kv:
        raise ValueError("spec needs at least a kind")
    view = ViewState(
        yaw=math.radians(float(kv.get("yaw_deg", 0.0))),
        pitch=math.radians(float(kv.get("pitch_deg", 0.0))),
        fov=math.radians(float(kv.get("fov_deg", 90.0))),
        fov_max=math.radians(float(kv.get("fov_max_deg", 60.0))),
        aspect=float(kv.get("aspect", 4.0 / 3.0)),
    )
    return ProjectionSpec(kind=kv["kind"], view=view, pannini_d=float(kv.get("pannini_d", 1.0)))


def _frustum_forward(p, tangent):
    x, y, z = p[..., 0], p[..., 1], p[..., 2]
    if np.any(z >= -EPS):
        raise BehindCameraError("direction at or behind the camera plane")
    return np.stack([x / (-z), y / (-z)], axis=-1) / tangent


def _frustum_inverse(q, tangent):
    u = q[..., 0] * tangent
    v = q[..., 1] * tangent
    d = np.stack([u, v, -np.ones_like(u)], axis=-1)
    return d / np.linalg.norm(d, axis=-1, keepdims=True)


def _edge_tangent(view, rho):
    """Tangent of the half-angle where the shrunk FOV edge ends up.

    The edge starts fov/2 off axis, i.e. at stereographic radius
    2*tan(fov/4); scaling by rho and lifting puts it 2*arctan(rho*tan(fov/4))
    off axis.  Dividing the pinhole stage by this tangent pins the original
    FOV edge to |u| = 1 exactly.  If the shrunk edge is still at or past
    90 degrees (extreme fov against a moderate fov_max) no finite normalizer
    reaches it; frame the nominal fov_max cone instead.
    """
    t = rho * math.tan(0.25 * view.fov)
    if t >= 1.0 - 1e-12:
        return math.tan(0.5 * view.fov_max)
    return 2.0 * t / (1.0 - t * t)


def _perspective_forward(p, view):
    q = rotate_view(np.asarray(p, dtype=float), view.yaw, view.pitch)
    return _frustum_forward(q, math.tan(0.5 * view.fov))


def _perspective_inverse(q, view):
    d = _frustum_inverse(np.asarray(q, dtype=float), math.tan(0.5 * view.fov))
    return rotate_view_inverse(d, view.yaw, view.pitch)


def mobius_forward(p, view):
    """Project direction(s) p through the full shrink pipeline.

    rotate -> conjugated radial shrink -> pinhole, normalized so the original
    FOV edge lands on |u| = 1.  When rho = 1 this IS the perspective path
    (same code object), so the degenerate case matches it bit for bit.
    Directions whose shrunk image stays behind the camera raise
    BehindCameraError.
    """
    rho = shrink_factor(view.fov, view.fov_max)
    if rho == 1.0:
        return _perspective_forward(p, view)
    q = rotate_view(np.asarray(p, dtype=float), view.yaw, view.pitch)
    shrunk = sphere_conjugate(hyperbolic_scaling(rho), q)
    return _frustum_forward(shrunk, _edge_tangent(view, rho))


def mobius_inverse(q, view):
    """Exact inverse of mobius_forward; total on the plane.

    Every plane point unprojects: the pinhole inverse lands strictly in
    front (z < 0), expansion by 1/rho keeps the lift finite, and the back
    rotation is total.
    """
    rho = shrink_factor(view.fov, view.fov_max)
    if rho == 1.0:
        return _perspective_inverse(q, view)
    d = _frustum_inverse(np.asarray(q, dtype=float), _edge_tangent(view, rho))
    x, y, z = d[..., 0], d[..., 1], d[..., 2]
    w = (2.0 * x + 2.0j * y) / ((1.0 - z) * rho)
    p = inverse_stereographic(w)
    return rotate_view_inverse(p, view.yaw, view.pitch)


def _stereographic_forward(p, view):
    q = rotate_view(np.asarray(p, dtype=float), view.yaw, view.pitch)
    w = stereographic(q)
    scale = 2.0 * math.tan(0.25 * view.fov)
    return np.stack([w.real, w.imag], axis=-1) / scale


def _stereographic_inverse(q, view):
    q = np.asarray(q, dtype=float)
    scale = 2.0 * math.tan(0.25 * view.fov)
    p = inverse_stereographic(scale * (q[..., 0] + 1j * q[..., 1]))
    return rotate_view_inverse(p, view.yaw, view.pitch)


def _mercator_forward(p, view):
    q = rotate_view(np.asarray(p, dtype=float), view.yaw, view.pitch)
    x, y, z = q[..., 0], q[..., 1], q[..., 2]
    az = np.arctan2(x, -z)
    alt = np.arcsin(np.clip(y, -1.0, 1.0))
    if np.any(np.abs(alt) >= ALT_CAP):
        raise DomainError("mercator has no image at the poles")
    half = 0.5 * view.fov
    v = np.log(np.tan(0.25 * math.pi + 0.5 * alt))
    return np.stack([az / half, v / half], axis=-1)


def _mercator_inverse_masked(q, view):
    q = np.asarray(q, dtype=float)
    half = 0.5 * view.fov
    az = q[..., 0] * half
    ln = q[..., 1] * half
    valid = (np.abs(az) <= math.pi) & (np.abs(ln) <= MERC_V_CAP)
    alt = 2.0 * np.arctan(np.exp(np.where(valid, ln, 0.0))) - 0.5 * math.pi
    d = from_spherical(np.where(valid, az, 0.0), alt)
    return rotate_view_inverse(d, view.yaw, view.pitch), valid


def _pannini_scale(view, d):
    half = 0.5 * view.fov
    return (d + 1.0) / (d + math.cos(half)) * math.sin(half)


def _pannini_forward(p, view, d):
    q = rotate_view(np.asarray(p, dtype=float), view.yaw, view.pitch)
    x, y, z = q[..., 0], q[..., 1], q[..., 2]
    r = np.hypot(x, z)
    if np.any(r < POLE_GUARD):
        raise DomainError("pannini has no image at the poles")
    theta = np.arctan2(x, -z)
    if np.any(np.abs(theta) >= _pannini_theta_max(d)):
        raise DomainError("direction beyond the invertible pannini range")
    h = (d + 1.0) / (d + np.cos(theta))
    s = _pannini_scale(view, d)
    return np.stack([h * np.sin(theta) / s, h * (y / r) / s], axis=-1)


def _pannini_inverse_masked(q, view, d):
    # Solve u = (d+1) sin(theta) / (d + cos(theta)) for theta on the
    # monotonic branch: quadratic in cos(theta), and the + root is the
    # branch (it degrades to cos(theta_max) exactly at the image border).
    q = np.asarray(q, dtype=float)
    s = _pannini_scale(view, d)
    bu = q[..., 0] * s
    bv = q[..., 1] * s
    k = d + 1.0
    a = bu * bu
    inner = a * (1.0 - d * d) + k * k
    valid = inner >= 0.0  # can only fail for d > 1
    root = np.sqrt(np.where(valid, inner, 0.0))
    cos_t = (-a * d + k * root) / (a + k * k)
    sin_t = bu * (d + cos_t) / k
    theta = np.arctan2(sin_t, cos_t)
    lat = np.arctan(bv * (d + cos_t) / k)
    dirs = from_spherical(np.where(valid, theta, 0.0), lat)
    return rotate_view_inverse(dirs, view.yaw, view.pitch), valid


def project(spec: ProjectionSpec, p):
    """Plane image of direction(s) p under the spec'd projection."""
    view = spec.view
    if spec.kind == "mobius":
        return mobius_forward(p, view)
    if spec.kind == "perspective":
        return _perspective_forward(p, view)
    if spec.kind == "stereographic":
        return _stereographic_forward(p, view)
    if spec.kind == "mercator":
        return _mercator_forward(p, view)
    return _pannini_forward(p, view, spec.pannini_d)


def unproject_masked(spec: ProjectionSpec, q):
    """(directions, valid) for plane point(s) q; no raising on misses.

    Invalid entries (points outside the projection's image, possible for
    mercator and pannini) hold a placeholder direction and valid = False.
    This is the renderer's entry point: misses become the fill color.
    """
    view = spec.view
    q = np.asarray(q, dtype=float)
    if spec.kind == "mobius":
        d = mobius_inverse(q, view)
    elif spec.kind == "perspective":
        d = _perspective_inverse(q, view)
    elif spec.kind == "stereographic":
        d = _stereographic_inverse(q, view)
    elif spec.kind == "mercator":
        return _mercator_inverse_masked(q, view)
    else:
        return _pannini_inverse_masked(q, view, spec.pannini_d)
    return d, np.ones(q.shape[:-1], dtype=bool)


def unproject(spec: ProjectionSpec, q):
    """Direction(s) projecting to q; OutOfImageError if any q has no preimage."""
    d, valid = unproject_masked(spec, q)
    if not np.all(valid):
        misses = int(valid.size - np.count_nonzero(valid))
        raise OutOfImageError(f"{misses} point(s) outside the {spec.kind} image")
    return d
