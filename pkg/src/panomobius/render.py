"""Equirectangular panoramas: loading, sampling, and inverse-mapped rendering.

Rendering walks the output raster, unprojects every pixel center to a sphere
direction, and samples the panorama there.  It is deterministic: the same
inputs give byte-identical rasters, regardless of how many workers carve up
the rows.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from PIL import Image

from .projections import (
    SPEC_KEYS,
    ProjectionSpec,
    project,
    spec_from_mapping,
    spec_to_mapping,
    unproject,
    unproject_masked,
)
from .sphere import to_spherical

# Environment override for the worker count used by render().
WORKERS_ENV = "PANOMOBIUS_WORKERS"
# Fixed start offset into the Halton sequence for parity vectors; part of the
# byte-reproducibility contract, never change it.
VECTOR_OFFSET = 17

FILTERS = ("nearest", "bilinear")


class EquirectImage:
    """An equirectangular panorama as an 8-bit HxWx3 or HxWx4 array.

    Pixel (i, j) centers sit at azimuth ((i+0.5)/W - 0.5)*2*pi and altitude
    (0.5 - (j+0.5)/H)*pi, so row 0 is the north edge.  Azimuth wraps around
    the seam; altitude clamps at the poles.
    """

    def __init__(self, pixels):
        pixels = np.asarray(pixels)
        if pixels.dtype != np.uint8:
            raise ValueError("expected 8-bit pixels")
        if pixels.ndim != 3 or pixels.shape[2] not in (3, 4):
            raise ValueError("expected an HxWx3 or HxWx4 pixel array")
        self.pixels = pixels
        self.height = pixels.shape[0]
        self.width = pixels.shape[1]

    @classmethod
    def open(cls, path) -> "EquirectImage":
        """Load a PNG or JPEG panorama; alpha is kept when present."""
        with Image.open(path) as im:
            im = im.convert("RGBA" if "A" in im.getbands() else "RGB")
            return cls(np.asarray(im))


def _sample_float(img: EquirectImage, dirs, filter):
    az, alt = to_spherical(dirs)
    w, h = img.width, img.height
    fi = (az * (0.5 / math.pi) + 0.5) * w - 0.5
    fj = (0.5 - alt / math.pi) * h - 0.5
    pix = img.pixels
    if filter == "nearest":
        i = np.rint(fi).astype(np.int64) % w
        j = np.clip(np.rint(fj).astype(np.int64), 0, h - 1)
        return pix[j, i].astype(np.float64)
    if filter != "bilinear":
        raise ValueError(f"unknown filter {filter!r}")
    i0f = np.floor(fi)
    j0f = np.floor(fj)
    ti = (fi - i0f)[..., None]
    tj = (fj - j0f)[..., None]
    i0 = i0f.astype(np.int64) % w
    i1 = (i0 + 1) % w
    j0 = np.clip(j0f.astype(np.int64), 0, h - 1)
    j1 = np.clip(j0 + 1, 0, h - 1)
    c00 = pix[j0, i0].astype(np.float64)
    c10 = pix[j0, i1].astype(np.float64)
    c01 = pix[j1, i0].astype(np.float64)
    c11 = pix[j1, i1].astype(np.float64)
    top = c00 + ti * (c10 - c00)
    bot = c01 + ti * (c11 - c01)
    return top + tj * (bot - top)


def sample(img: EquirectImage, dirs, filter="bilinear"):
    """Panorama color(s) along unit direction(s), one uint8 per channel.

    Bilinear filtering interpolates across the azimuth seam and clamps
    vertically at the poles; nearest picks the closest pixel.
    """
    vals = _sample_float(img, np.asarray(dirs, dtype=float), filter)
    return np.clip(np.rint(vals), 0.0, 255.0).astype(np.uint8)


@dataclass(frozen=True)
class RenderRequest:
    """Output raster shape and filtering for a projection render."""

    spec: ProjectionSpec
    out_width: int = 1024
    out_height: int = 768
    filter: str = "bilinear"

    def __post_init__(self):
        if self.out_width < 1 or self.out_height < 1:
            raise ValueError("output dimensions must be at least 1x1")
        if self.filter not in FILTERS:
            raise ValueError(f"filter must be one of {FILTERS}")
        ratio = self.out_width / self.out_height
        if abs(self.spec.view.aspect - ratio) > 1e-6:
            raise ValueError(
                f"spec aspect {self.spec.view.aspect:g} does not match "
                f"{self.out_width}x{self.out_height}"
            )


def _render_rows(img, req, j0, j1):
    w, h = req.out_width, req.out_height
    aspect = req.spec.view.aspect
    u = ((np.arange(w) + 0.5) / w - 0.5) * 2.0
    v = (0.5 - (np.arange(j0, j1) + 0.5) / h) * (2.0 / aspect)
    q = np.empty((j1 - j0, w, 2))
    q[..., 0] = u[None, :]
    q[..., 1] = v[:, None]
    dirs, valid = unproject_masked(req.spec, q)
    vals = _sample_float(img, dirs, req.filter)[..., :3]
    vals = np.where(valid[..., None], vals, 0.0)
    return np.clip(np.rint(vals), 0.0, 255.0).astype(np.uint8)


def render(img: EquirectImage, req: RenderRequest, workers=None):
    """Inverse-map the panorama through req.spec into an HxWx3 uint8 raster.

    Pixels outside the projection's image are opaque black.  workers > 1
    splits the output into row bands executed on a thread pool; the math per
    band is identical, so the bytes are too.  Default worker count comes from
    the PANOMOBIUS_WORKERS environment variable, else 1.
    """
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV) or 1)
    workers = max(1, min(int(workers), req.out_height))
    if workers == 1:
        return _render_rows(img, req, 0, req.out_height)
    bounds = np.linspace(0, req.out_height, workers + 1).astype(int)
    out = np.empty((req.out_height, req.out_width, 3), dtype=np.uint8)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = {
            pool.submit(_render_rows, img, req, int(j0), int(j1)): (int(j0), int(j1))
            for j0, j1 in zip(bounds[:-1], bounds[1:])
            if j1 > j0
        }
        for fut, (j0, j1) in futures.items():
            out[j0:j1] = fut.result()
    return out


def write_png(path, raster):
    """Write an HxWx3 or HxWx4 uint8 raster as a PNG."""
    Image.fromarray(np.asarray(raster, dtype=np.uint8)).save(path, format="PNG")


def _halton(i, base):
    # Radical-inverse (van der Corput) value of index i in the given base.
    f, r = 1.0, 0.0
    while i > 0:
        f /= base
        r += f * (i % base)
        i //= base
    return r


def export_test_vectors(spec: ProjectionSpec, n: int):
    """n deterministic (direction, plane point) parity records for spec.

    Record 0 is the exact view center; the rest fill the frame on a Halton
    low-discrepancy pattern starting at a fixed offset, so repeated runs are
    byte-identical.  The stored plane point is re-projected from the stored
    direction, making every record exactly self-consistent for consumers.

    Returns (dirs, plane): float arrays of shape (n, 3) and (n, 2).
    """
    if n < 1:
        raise ValueError("need at least one record")
    q = np.zeros((n, 2))
    for i in range(1, n):
        q[i, 0] = 2.0 * _halton(i + VECTOR_OFFSET, 2) - 1.0
        q[i, 1] = (2.0 * _halton(i + VECTOR_OFFSET, 3) - 1.0) / spec.view.aspect
    dirs = unproject(spec, q)
    plane = project(spec, dirs)
    return dirs, plane


def format_vector_records(spec: ProjectionSpec, dirs, plane) -> str:
    """Serialize parity records: one line of space-separated key=value pairs.

    Each line is self-contained: the full spec mapping plus dir_x dir_y dir_z
    u v at 17 significant digits.
    """
    prefix = " ".join(f"{k}={v}" for k, v in spec_to_mapping(spec).items())
    lines = []
    for d, p in zip(np.atleast_2d(dirs), np.atleast_2d(plane)):
        lines.append(
            f"{prefix} dir_x={d[0]:.17g} dir_y={d[1]:.17g} dir_z={d[2]:.17g} "
            f"u={p[0]:.17g} v={p[1]:.17g}"
        )
    return "\n".join(lines) + "\n"


def parse_vector_records(text: str):
    """Parse format_vector_records output: (spec, dirs (n,3), plane (n,2)).

    The spec is taken from the first record; all records in one file share it.
    """
    dirs, plane = [], []
    spec = None
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        kv = dict(tok.split("=", 1) for tok in line.split())
        if spec is None:
            spec = spec_from_mapping({k: kv[k] for k in SPEC_KEYS if k in kv})
        dirs.append([float(kv["dir_x"]), float(kv["dir_y"]), float(kv["dir_z"])])
        plane.append([float(kv["u"]), float(kv["v"])])
    if spec is None:
        raise ValueError("no records found")
    return spec, np.array(dirs), np.array(plane)
