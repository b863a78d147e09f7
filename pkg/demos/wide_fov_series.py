"""
Pushing the field of view
-------------------------

The point of the shrink projection is that the field of view becomes a
free parameter: the same scene renders at 60 through 340 degrees without
the blow-up that kills a pinhole past 120 or so.  This script renders
that sweep with fov_max pinned at 60 degrees and prints, for each stop,
the shrink factor and where the FOV edge would have landed under plain
perspective.

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
    shrink_factor,
    write_png,
)

OUT = Path(__file__).parent / "demo_output"


def striped_panorama(width=2048, height=1024):
    """Meridian stripes every 20 degrees over a soft vertical gradient."""
    az = ((np.arange(width) + 0.5) / width - 0.5) * 2 * math.pi
    alt = (0.5 - (np.arange(height) + 0.5) / height) * math.pi
    a, b = np.meshgrid(az, alt)
    stripe = (np.floor(a / math.radians(20.0)) % 2).astype(float)
    sky = 0.5 * (1 + np.sin(b))
    r = 40 + 170 * stripe + 30 * sky
    g = 60 + 110 * stripe + 60 * sky
    bl = 80 + 60 * stripe + 110 * sky
    return EquirectImage(
        np.clip(np.stack([r, g, bl], axis=-1), 0, 255).astype(np.uint8)
    )


def main():
    OUT.mkdir(exist_ok=True)
    img = striped_panorama()

    print(f"{'fov':>5} {'rho':>8} {'pinhole edge':>14}   frame")
    print("-" * 52)
    for fov_deg in (60, 100, 140, 172, 220, 280, 340):
        view = ViewState(
            fov=math.radians(fov_deg), fov_max=math.radians(60.0), aspect=4.0 / 3.0
        )
        rho = shrink_factor(view.fov, view.fov_max)
        spec = ProjectionSpec("mobius", view)
        frame = render(img, RenderRequest(spec, out_width=480, out_height=360))
        path = OUT / f"sweep_{fov_deg:03d}.png"
        write_png(path, frame)

        if fov_deg < 180:
            edge = f"{math.tan(math.radians(fov_deg) / 2):.1f} half-widths"
        else:
            edge = "behind camera"
        print(f"{fov_deg:>4}  {rho:>8.4f} {edge:>14}   {path.name}")

    print()
    print("Past 180 degrees a pinhole has nothing to project onto; the sweep")
    print("keeps going because the shrink pulls the scene into the forward")
    print("hemisphere first.")


if __name__ == "__main__":
    main()
