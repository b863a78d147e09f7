"""Tests for the pairwise-scale distortion estimator.

The zero-distortion oracle feeds the estimator a point set it can
flatten exactly: points along a single great circle, projected to their
arc-length positions on a line.  Every pairwise planar distance then
equals the geodesic distance and delta must vanish identically.  No 2D
cap admits such a map (the sphere is curved), which is also why the
perspective numbers below are strictly positive.
"""

import math

import numpy as np
import pytest

from panomobius import (
    DomainError,
    ProjectionSpec,
    ViewState,
    cap_grid,
    milnor_distortion,
    project,
)

GRID_SEED = 271828


def _spec(kind, fov_deg, fov_max_deg=60.0, **kw):
    view = ViewState(fov=math.radians(fov_deg), fov_max=math.radians(fov_max_deg))
    return ProjectionSpec(kind, view, **kw)


# ---------------------------------------------------------------------------
# grid construction


def test_cap_grid_shape_and_norms():
    view = ViewState(fov=math.radians(150.0))
    pts = cap_grid(view, 12)
    assert pts.shape == (144, 3)
    assert np.abs(np.linalg.norm(pts, axis=1) - 1.0).max() < 1e-12


def test_cap_grid_stays_inside_fov():
    view = ViewState(fov=math.radians(172.0), yaw=0.4, pitch=-0.2)
    pts = cap_grid(view, 20)
    from panomobius import from_spherical

    center = from_spherical(view.yaw, view.pitch)
    angles = np.arccos(np.clip(pts @ center, -1.0, 1.0))
    assert angles.max() <= view.fov / 2 + 1e-12
    assert angles.min() > 0.0


def test_cap_grid_nests_under_doubling():
    view = ViewState(fov=math.radians(120.0))
    coarse = cap_grid(view, 8)
    fine = cap_grid(view, 16)
    # Every coarse point appears among the fine points.
    d = np.linalg.norm(coarse[:, None, :] - fine[None, :, :], axis=-1).min(axis=1)
    assert d.max() < 1e-12


# ---------------------------------------------------------------------------
# report semantics


def test_exact_pair_count():
    report = milnor_distortion(_spec("perspective", 60.0), grid_n=16)
    assert report.pair_count == 256 * 255 // 2
    assert report.grid_n == 16
    assert math.isclose(report.fov, math.radians(60.0))


def test_delta_is_log_ratio_and_nonnegative():
    for kind in ("mobius", "perspective", "stereographic", "mercator", "pannini"):
        report = milnor_distortion(_spec(kind, 150.0), grid_n=20)
        assert report.sigma_min <= report.sigma_max
        assert report.delta >= 0.0
        assert math.isclose(
            report.delta, math.log(report.sigma_max / report.sigma_min), abs_tol=1e-12
        )


def test_isometric_point_set_has_zero_delta():
    # Points along one great circle, "projected" to arc length: planar
    # distance == geodesic distance for every pair, so sigma is constant.
    t = np.linspace(-0.6, 0.6, 40)
    arc = np.stack([np.sin(t), np.zeros_like(t), -np.cos(t)], axis=-1)
    flat = np.stack([t, np.zeros_like(t)], axis=-1)
    report = milnor_distortion(
        _spec("perspective", 90.0), projector=lambda pts: flat, points=arc
    )
    # Zero up to the arcsin round-trip on the geodesic side.
    assert abs(report.delta) < 1e-12
    assert math.isclose(report.sigma_min, 1.0, abs_tol=1e-12)
    assert math.isclose(report.sigma_max, 1.0, abs_tol=1e-12)


def test_delta_is_scale_invariant():
    spec = _spec("perspective", 90.0)
    base = milnor_distortion(spec, grid_n=24)
    k = 3.7
    scaled = milnor_distortion(spec, grid_n=24, projector=lambda pts: k * project(spec, pts))
    assert abs(scaled.delta - base.delta) < 1e-12
    assert math.isclose(scaled.sigma_min, k * base.sigma_min, rel_tol=1e-12)
    assert math.isclose(scaled.sigma_max, k * base.sigma_max, rel_tol=1e-12)


def test_tiny_fov_stereographic_is_nearly_isometric():
    report = milnor_distortion(_spec("stereographic", 0.1), grid_n=30)
    assert report.delta < 1e-5


def test_perspective_distortion_grows_with_fov():
    d60 = milnor_distortion(_spec("perspective", 60.0, 60.0), grid_n=30).delta
    d120 = milnor_distortion(_spec("perspective", 120.0, 120.0), grid_n=30).delta
    assert d120 > d60


def test_mobius_beats_perspective_at_wide_fov():
    # The point of the shrink: at 120 degrees the scale spread of the
    # shrunk projection stays below the plain pinhole's.
    dm = milnor_distortion(_spec("mobius", 120.0, 60.0), grid_n=30).delta
    dp = milnor_distortion(_spec("perspective", 120.0, 120.0), grid_n=30).delta
    assert dm < dp


def test_refinement_never_shrinks_delta():
    # Doubling grid_n keeps every old ring and azimuth, so the pair set
    # only grows and the extremes can only widen.
    spec = _spec("mobius", 172.0)
    d16 = milnor_distortion(spec, grid_n=16).delta
    d32 = milnor_distortion(spec, grid_n=32).delta
    d64 = milnor_distortion(spec, grid_n=64).delta
    assert d16 <= d32 <= d64


def test_unprojectable_grid_raises_domain_error():
    # A perspective FOV this close to a half-sphere pushes the outermost
    # graticule ring inside the behind-camera guard band.
    spec = ProjectionSpec("perspective", ViewState(fov=math.pi - 1e-12, fov_max=1.0))
    with pytest.raises(DomainError):
        milnor_distortion(spec, grid_n=8)


def test_grid_n_floor():
    with pytest.raises(ValueError):
        milnor_distortion(_spec("perspective", 60.0), grid_n=1)


def test_sampled_path_is_deterministic():
    # 67x67 points exceed the exact-pair budget and switch to seeded
    # sampling; the draw must be reproducible and capped.
    spec = _spec("perspective", 90.0)
    a = milnor_distortion(spec, grid_n=67)
    b = milnor_distortion(spec, grid_n=67)
    assert a == b
    assert a.pair_count <= 10_000_000
    assert a.pair_count > 9_000_000
    exact_pairs = (67 * 67) * (67 * 67 - 1) // 2
    assert a.pair_count < exact_pairs
