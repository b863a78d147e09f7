"""Milnor-style distortion estimate over the projection's field of view.

For pairs of directions inside the FOV cap, sigma = projected planar distance
/ geodesic distance.  A scaled isometry has every sigma equal; the spread
delta = ln(sigma_max / sigma_min) is therefore zero for it and grows with
distortion, independent of any uniform output scaling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import pdist

from .errors import DomainError, GeometryError
from .projections import ProjectionSpec, project
from .sphere import rotate_view_inverse

# Exact all-pairs evaluation up to this many pairs (grid_n <= 66); beyond it,
# this many pairs are drawn from a fixed-seed generator instead.
PAIR_CAP = 10_000_000
SAMPLE_SEED = 20230917
# Pairs closer than this geodesically are degenerate ratios and excluded.
MIN_GEODESIC = 1e-9


@dataclass(frozen=True)
class DistortionReport:
    """Extreme pairwise scales of a projection and their log-ratio."""

    sigma_min: float
    sigma_max: float
    delta: float
    pair_count: int
    grid_n: int
    fov: float


def cap_grid(view, grid_n):
    """grid_n x grid_n directions on the FOV cap around the view axis.

    A polar graticule: grid_n rings at angular radii (fov/2)*(i+1)/grid_n
    crossed with grid_n equally spaced azimuths.  Doubling grid_n keeps every
    existing ring and azimuth, so finer grids nest inside coarser ones.
    """
    half = 0.5 * view.fov
    theta = half * np.arange(1, grid_n + 1) / grid_n
    psi = 2.0 * math.pi * np.arange(grid_n) / grid_n
    tt, pp = np.meshgrid(theta, psi, indexing="ij")
    local = np.stack(
        [np.sin(tt) * np.cos(pp), np.sin(tt) * np.sin(pp), -np.cos(tt)], axis=-1
    ).reshape(-1, 3)
    return rotate_view_inverse(local, view.yaw, view.pitch)


def _sampled_extremes(pts, plane, m, rng):
    lo, hi = math.inf, -math.inf
    used = 0
    remaining = PAIR_CAP
    block = 1_000_000
    while remaining > 0:
        k = min(block, remaining)
        ii = rng.integers(0, m, k)
        jj = rng.integers(0, m, k)
        keep = ii != jj
        ii, jj = ii[keep], jj[keep]
        chord = np.linalg.norm(pts[ii] - pts[jj], axis=-1)
        geo = 2.0 * np.arcsin(np.clip(0.5 * chord, 0.0, 1.0))
        ok = geo >= MIN_GEODESIC
        planar = np.linalg.norm(plane[ii[ok]] - plane[jj[ok]], axis=-1)
        sigma = planar / geo[ok]
        if sigma.size:
            lo = min(lo, float(sigma.min()))
            hi = max(hi, float(sigma.max()))
            used += sigma.size
        remaining -= k
    return lo, hi, used


def milnor_distortion(spec: ProjectionSpec, grid_n=50, projector=None, points=None):
    """Distortion report for spec over its FOV cap graticule.

    All distinct point pairs are evaluated exactly while they fit under
    PAIR_CAP; denser grids fall back to PAIR_CAP pairs drawn with a fixed
    seed, so results stay reproducible.  projector, when given, replaces
    project(spec, .) as the (n,3) -> (n,2) plane mapping, and points
    replaces the cap graticule itself; together they admit synthetic
    stubs (scale-invariance checks, exactly-isometric point sets).

    Raises DomainError if any grid point cannot be projected (e.g. a
    mercator cap wide enough to touch the poles).
    """
    if grid_n < 2:
        raise ValueError(f"grid_n must be at least 2, got {grid_n}")
    pts = cap_grid(spec.view, grid_n) if points is None else np.asarray(points, dtype=float)
    try:
        plane = projector(pts) if projector is not None else project(spec, pts)
    except GeometryError as exc:
        raise DomainError(f"grid point not projectable under {spec.kind}: {exc}") from exc
    plane = np.asarray(plane, dtype=float)
    m = len(pts)
    if m * (m - 1) // 2 <= PAIR_CAP:
        chord = pdist(pts)
        geo = 2.0 * np.arcsin(np.clip(0.5 * chord, 0.0, 1.0))
        ok = geo >= MIN_GEODESIC
        sigma = pdist(plane)[ok] / geo[ok]
        lo, hi, used = float(sigma.min()), float(sigma.max()), int(np.count_nonzero(ok))
    else:
        rng = np.random.default_rng(SAMPLE_SEED)
        lo, hi, used = _sampled_extremes(pts, plane, m, rng)
    return DistortionReport(
        sigma_min=lo,
        sigma_max=hi,
        delta=float(np.log(hi / lo)),
        pair_count=used,
        grid_n=grid_n,
        fov=spec.view.fov,
    )
