"""Mobius transformations of the extended complex plane and their sphere action.

The algebra works on exact tagged values: the point at infinity is a real
citizen of the type, never a large float.  Conjugating a planar map by the
stereographic identification turns it into a sphere-to-sphere warp, which is
how the radial shrink acts on the viewing sphere.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import IdentityMapError, NonPositiveScaleError, PoleProjectionError
from .sphere import POLE_EPS, inverse_stereographic

# |ad - bc| at or below this is degenerate; also the "is this coefficient
# zero" threshold for fixed-point branches and identity detection.
DEGENERATE_EPS = 1e-12
# Trace-based classification tolerance.
CLASSIFY_EPS = 1e-9


@dataclass(frozen=True)
class ComplexPoint:
    """A point of the extended complex plane: finite (re, im) or infinity."""

    re: float = 0.0
    im: float = 0.0
    at_infinity: bool = False

    def __post_init__(self):
        if self.at_infinity:
            object.__setattr__(self, "re", 0.0)
            object.__setattr__(self, "im", 0.0)
        elif not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValueError("finite point with non-finite parts; use INFINITY")

    @classmethod
    def of(cls, z) -> "ComplexPoint":
        z = complex(z)
        return cls(z.real, z.imag)

    @property
    def value(self) -> complex:
        if self.at_infinity:
            raise ValueError("the point at infinity has no complex value")
        return complex(self.re, self.im)

    def __repr__(self):
        if self.at_infinity:
            return "ComplexPoint(infinity)"
        return f"ComplexPoint({self.re!r}, {self.im!r})"


INFINITY = ComplexPoint(at_infinity=True)


class MobiusClass(enum.Enum):
    IDENTITY = "identity"
    ELLIPTIC = "elliptic"
    HYPERBOLIC = "hyperbolic"
    PARABOLIC = "parabolic"
    LOXODROMIC = "loxodromic"


@dataclass(frozen=True)
class MobiusTransform:
    """z -> (a z + b) / (c z + d) with complex coefficients and ad - bc != 0."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for name in "abcd":
            v = complex(getattr(self, name))
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise ValueError(f"coefficient {name} must be finite")
            object.__setattr__(self, name, v)
        if abs(self.determinant) <= DEGENERATE_EPS:
            raise ValueError("degenerate transform: ad - bc is (near) zero")

    @classmethod
    def identity(cls) -> "MobiusTransform":
        return cls(1.0, 0.0, 0.0, 1.0)

    @property
    def determinant(self) -> complex:
        return self.a * self.d - self.b * self.c

    def normalized(self) -> "MobiusTransform":
        """Scale coefficients so ad - bc = 1 (unique up to global sign)."""
        s = cmath.sqrt(self.determinant)
        return MobiusTransform(self.a / s, self.b / s, self.c / s, self.d / s)

    def canonical(self) -> "MobiusTransform":
        """Normalized form with the sign ambiguity resolved.

        The first coefficient of (a, b, c, d) with magnitude above
        DEGENERATE_EPS gets a nonnegative real part (imaginary part breaking
        exact ties), so equal maps compare equal coefficient-wise.
        """
        m = self.normalized()
        for v in (m.a, m.b, m.c, m.d):
            if abs(v) > DEGENERATE_EPS:
                if v.real < 0.0 or (v.real == 0.0 and v.imag < 0.0):
                    return MobiusTransform(-m.a, -m.b, -m.c, -m.d)
                return m
        return m

    def is_identity(self) -> bool:
        m = self.canonical()
        return (
            abs(m.a - 1.0) <= DEGENERATE_EPS
            and abs(m.b) <= DEGENERATE_EPS
            and abs(m.c) <= DEGENERATE_EPS
            and abs(m.d - 1.0) <= DEGENERATE_EPS
        )

    def apply(self, z) -> ComplexPoint:
        """Evaluate the map at z; total on the extended plane.

        z may be a ComplexPoint or anything complex() accepts.  Finite inputs
        on the pole of the map (cz + d = 0), and finite inputs whose image
        overflows doubles, both come back as the tagged infinity.
        """
        if isinstance(z, ComplexPoint) and z.at_infinity:
            if abs(self.c) <= DEGENERATE_EPS:
                return INFINITY
            return ComplexPoint.of(self.a / self.c)
        w = z.value if isinstance(z, ComplexPoint) else complex(z)
        den = self.c * w + self.d
        if den == 0:
            return INFINITY
        val = (self.a * w + self.b) / den
        if not (math.isfinite(val.real) and math.isfinite(val.imag)):
            return INFINITY
        return ComplexPoint.of(val)

    def __call__(self, z) -> ComplexPoint:
        return self.apply(z)

    def compose(self, other: "MobiusTransform") -> "MobiusTransform":
        """The map applying `other` first, then self (coefficient matrix product)."""
        return MobiusTransform(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "MobiusTransform":
        return MobiusTransform(self.d, -self.b, -self.c, self.a)

    def fixed_points(self) -> tuple[ComplexPoint, ...]:
        """The one or two solutions of M(z) = z on the extended plane.

        Affine maps (c = 0) always fix infinity, plus b/(d - a) when a != d.
        Otherwise the roots of cz^2 + (d - a)z - b = 0; a (near-)zero
        discriminant means the two roots coincide (parabolic: one point).
        """
        if self.is_identity():
            raise IdentityMapError("every point is fixed by the identity")
        m = self.normalized()
        if abs(m.c) <= DEGENERATE_EPS:
            if abs(m.d - m.a) <= DEGENERATE_EPS:
                return (INFINITY,)
            return (ComplexPoint.of(m.b / (m.d - m.a)), INFINITY)
        disc = (m.d - m.a) ** 2 + 4.0 * m.c * m.b  # equals tr^2 - 4 at det 1
        if abs(disc) <= CLASSIFY_EPS:
            return (ComplexPoint.of((m.a - m.d) / (2.0 * m.c)),)
        r = cmath.sqrt(disc)
        return (
            ComplexPoint.of((m.a - m.d + r) / (2.0 * m.c)),
            ComplexPoint.of((m.a - m.d - r) / (2.0 * m.c)),
        )

    def classify(self) -> MobiusClass:
        """Four-way taxonomy by the squared trace of the det-1 form.

        Real tr^2 in [0, 4) rotates (elliptic), above 4 scales radially
        (hyperbolic), exactly 4 is parabolic (or the identity, reported
        separately); anything else, including negative real tr^2, is
        loxodromic.
        """
        if self.is_identity():
            return MobiusClass.IDENTITY
        m = self.normalized()
        t2 = (m.a + m.d) ** 2
        if abs(t2.imag) > CLASSIFY_EPS:
            return MobiusClass.LOXODROMIC
        x = t2.real
        if abs(x - 4.0) <= CLASSIFY_EPS:
            return MobiusClass.PARABOLIC
        if -CLASSIFY_EPS <= x < 4.0:
            return MobiusClass.ELLIPTIC
        if x > 4.0:
            return MobiusClass.HYPERBOLIC
        return MobiusClass.LOXODROMIC


def hyperbolic_scaling(rho) -> MobiusTransform:
    """The radial scaling M(z) = rho*z in det-1 form: (sqrt(rho), 0, 0, 1/sqrt(rho))."""
    if not rho > 0.0:
        raise NonPositiveScaleError(f"scale must be positive, got {rho}")
    r = math.sqrt(rho)
    return MobiusTransform(r, 0.0, 0.0, 1.0 / r)


def sphere_conjugate(m: MobiusTransform, p):
    """Act on sphere direction(s) p by m through the stereographic identification.

    inverse_stereographic(m(stereographic(p))), with the pole handled through
    the tagged infinity: a direction at the pole is only legal when m fixes
    infinity (c = 0) and then stays at the pole; a finite direction sent to
    the map's pole lands on (0,0,1).
    """
    p = np.asarray(p, dtype=float)
    x, y, z = p[..., 0], p[..., 1], p[..., 2]
    at_pole = x * x + y * y + (z - 1.0) ** 2 < POLE_EPS * POLE_EPS
    if np.any(at_pole) and abs(m.c) > DEGENERATE_EPS:
        raise PoleProjectionError(
            "direction at the projection pole; this map does not fix infinity"
        )
    w = (2.0 * x + 2.0j * y) / np.where(at_pole, 1.0, 1.0 - z)
    den = m.c * w + m.d
    to_pole = den == 0
    w2 = (m.a * w + m.b) / np.where(to_pole, 1.0, den)
    to_pole = to_pole | ~np.isfinite(w2.real) | ~np.isfinite(w2.imag)
    out = inverse_stereographic(np.where(to_pole, 0.0, w2))
    lift_pole = at_pole | to_pole
    if np.any(lift_pole):
        out = np.where(lift_pole[..., None], np.array([0.0, 0.0, 1.0]), out)
    return out
