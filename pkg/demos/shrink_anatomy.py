"""
Anatomy of the shrink pipeline
------------------------------

This walkthrough takes a handful of viewing directions through the
projection one stage at a time: rotate the view center onto the shrink
pole, lift the sphere onto the complex plane stereographically, scale by
rho = fov_max / fov, drop back to the sphere, and project through a
pinhole.  Watching the intermediate values makes two facts concrete:

* the view center is a fixed point of the whole chain and lands at the
  image origin, and
* the azimuthal FOV edge lands exactly on (1, 0), however extreme the
  field of view is.

Run it with no arguments; it only prints.
"""

import math

import numpy as np

from panomobius import (
    ViewState,
    from_spherical,
    hyperbolic_scaling,
    inverse_stereographic,
    mobius_forward,
    rotate_view,
    shrink_factor,
    stereographic,
)


def main():
    view = ViewState(fov=math.radians(172.0), fov_max=math.radians(60.0), aspect=1.0)
    rho = shrink_factor(view.fov, view.fov_max)
    m = hyperbolic_scaling(rho)
    print(f"fov = 172 deg, fov_max = 60 deg  ->  rho = 60/172 = {rho:.5f}")
    print(f"shrink transform: z -> rho z, coefficients a = {m.a:.5f}, d = {m.d:.5f}")
    print()

    labels_and_dirs = [
        ("view center", from_spherical(0.0, 0.0)),
        ("30 deg right", from_spherical(math.radians(30.0), 0.0)),
        ("FOV edge (86 deg)", from_spherical(view.fov / 2, 0.0)),
        ("45 deg up", from_spherical(0.0, math.radians(45.0))),
    ]

    header = f"{'direction':<18} {'w = S(p)':>18} {'rho w':>18} {'output (u, v)':>22}"
    print(header)
    print("-" * len(header))
    for label, p in labels_and_dirs:
        rotated = rotate_view(p, view.yaw, view.pitch)
        w = stereographic(rotated)
        shrunk = rho * w
        back = inverse_stereographic(shrunk)
        q = mobius_forward(p, view)
        print(
            f"{label:<18} {w.real:>8.4f}{w.imag:>+8.4f}j "
            f"{shrunk.real:>9.4f}{shrunk.imag:>+8.4f}j "
            f"({q[0]:>9.6f}, {q[1]:>9.6f})"
        )
        # The lifted point is back on the unit sphere after the scale.
        assert abs(np.linalg.norm(back) - 1.0) < 1e-12

    print()
    print("The 86 deg edge sits at w = 2 tan(43 deg) = "
          f"{2 * math.tan(view.fov / 4):.4f} before the shrink and lands on "
          "u = 1 after the pinhole normalization.")
    print("A plain pinhole cannot frame this view at all: tan(86 deg) = "
          f"{math.tan(view.fov / 2):.1f} image widths from center.")


if __name__ == "__main__":
    main()
