"""
A family portrait at 160 degrees
--------------------------------

Renders the same very wide view through all five projections so they can
be compared side by side: plain perspective (strained this wide),
stereographic and mercator (the two conformal references), and the
shrink projection at two thresholds.  The panorama is procedural -- a
checkered sphere with a horizon band -- so the script has no inputs and
the straight lines and right angles make the distortions easy to read.

Outputs land in demo_output/ next to this script.
"""

import math
from pathlib import Path

import numpy as np

from panomobius import (
    EquirectImage,
    ProjectionSpec,
    RenderRequest,
    ViewState,
    render,
    write_png,
)

OUT = Path(__file__).parent / "demo_output"


def checkered_panorama(width=2048, height=1024):
    """A sphere painted with a 15-degree checkerboard and a warm horizon."""
    az = ((np.arange(width) + 0.5) / width - 0.5) * 2 * math.pi
    alt = (0.5 - (np.arange(height) + 0.5) / height) * math.pi
    a, b = np.meshgrid(az, alt)
    cell = math.radians(15.0)
    checker = ((np.floor(a / cell) + np.floor(b / cell)) % 2).astype(float)
    horizon = np.exp(-(b / math.radians(12.0)) ** 2)
    r = 60 + 150 * checker + 45 * horizon
    g = 70 + 120 * checker + 25 * horizon
    bl = 90 + 100 * checker - 40 * horizon
    return EquirectImage(
        np.clip(np.stack([r, g, bl], axis=-1), 0, 255).astype(np.uint8)
    )


def main():
    OUT.mkdir(exist_ok=True)
    img = checkered_panorama()
    fov = math.radians(160.0)

    family = [
        ("perspective", None, "every line straight, corners stretched hard"),
        ("stereographic", None, "circles kept, scale blowing up outward"),
        ("mercator", None, "verticals kept, but the view is a wall not a window"),
        ("mobius", 60.0, "center reads like a 60 deg photo, edges compressed"),
        ("mobius", 120.0, "milder shrink: closer to perspective, wider strain"),
    ]

    for kind, fov_max_deg, note in family:
        view = ViewState(
            fov=fov,
            fov_max=math.radians(fov_max_deg if fov_max_deg else 60.0),
            aspect=4.0 / 3.0,
        )
        spec = ProjectionSpec(kind, view)
        frame = render(img, RenderRequest(spec, out_width=640, out_height=480))
        suffix = f"_fovmax{fov_max_deg:g}" if fov_max_deg else ""
        path = OUT / f"family_{kind}{suffix}.png"
        write_png(path, frame)
        print(f"{path.name:<34} {note}")

    print()
    print("Five frames, one scene. The shrink frames keep the middle of the")
    print("image honest and pay for it only where the eye expects periphery.")


if __name__ == "__main__":
    main()
