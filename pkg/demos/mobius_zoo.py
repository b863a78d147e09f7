"""
A short tour of the transform zoo
---------------------------------

The shrink is one member of a four-class family.  Every invertible map
z -> (az + b)/(cz + d) of the extended plane is elliptic, hyperbolic,
parabolic, or loxodromic, told apart by the normalized trace; its fixed
points are where the geometry pivots.  This script classifies a
representative of each class, then puts the hyperbolic one on the sphere
and shows what it does to three kinds of circles -- the facts that make
the projection behave the way it does:

* meridians through the shrink axis slide along themselves,
* circles parallel to the equator stay parallel (they change latitude),
* everything else is carried to a different circle entirely.
"""

import cmath
import math

import numpy as np

from panomobius import MobiusTransform, hyperbolic_scaling, sphere_conjugate


def describe(name, m):
    fixed = []
    for f in m.fixed_points():
        fixed.append("inf" if f.at_infinity else f"{f.value:.3g}")
    print(f"  {name:<22} {m.classify().value:<12} fixed at {', '.join(fixed)}")


def circle(normal, n=360):
    normal = np.asarray(normal, float)
    normal /= np.linalg.norm(normal)
    seed = [0.0, 0.0, 1.0] if abs(normal[2]) < 0.9 else [1.0, 0.0, 0.0]
    e1 = np.cross(normal, seed)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(normal, e1)
    t = np.linspace(0, 2 * math.pi, n, endpoint=False)
    return np.outer(np.cos(t), e1) + np.outer(np.sin(t), e2), normal


def main():
    print("Four classes, one representative each:")
    describe("scale by 0.35", hyperbolic_scaling(0.35))
    describe("shift by 2+i", MobiusTransform(1, 2 + 1j, 0, 1))
    describe("rotate by 40 deg", MobiusTransform(cmath.exp(0.7j), 0, 0, 1))
    describe("scale and rotate (2i)", MobiusTransform(2j, 0, 0, 1))
    describe("swap 0 and inf (1/z)", MobiusTransform(0, 1, 1, 0))
    print()

    m = hyperbolic_scaling(60.0 / 172.0)
    print("The scale-by-60/172 action on the sphere, by circle type")
    print("(residual = how far image points leave the original plane):")

    meridian, n1 = circle([1.0, 0.0, 0.0])
    keep = np.linalg.norm(meridian - [0, 0, 1], axis=1) > 1e-6
    r1 = np.abs(sphere_conjugate(m, meridian[keep]) @ n1).max()
    print(f"  meridian through the poles      residual {r1:.2e}  (kept)")

    t = np.linspace(0, 2 * math.pi, 360, endpoint=False)
    ring = np.stack([0.8 * np.cos(t), 0.8 * np.sin(t), np.full_like(t, 0.6)], axis=-1)
    img = sphere_conjugate(m, ring)
    spread = img[:, 2].max() - img[:, 2].min()
    print(f"  parallel at z = 0.60            z-spread {spread:.2e}  "
          f"(moved to z = {img[0, 2]:.3f}, still parallel)")

    tilted, n3 = circle([0.3, 0.5, 0.8])
    img3 = sphere_conjugate(m, tilted)
    r3 = np.abs(img3 @ n3).max()
    planarity = np.linalg.svd(img3 - img3.mean(0), compute_uv=False)[-1]
    print(f"  tilted great circle             residual {r3:.2f}      "
          f"(a different circle now: own-plane flatness {planarity:.1e})")

    print()
    print("Circles always land on circles; which circle is the whole story.")


if __name__ == "__main__":
    main()
