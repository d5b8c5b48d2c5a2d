"""First-order disk geometry of the map w(z) = (1 + A z) / (1 + B z).

For complex A != B with |B| <= 1 the map sends the circle |z| = r onto a
circle whenever |B| r < 1, and onto a line when |B| r = 1 (the circle
then passes through the pole). Solving |w - 1|^2 = r^2 |A - B w|^2 for w
gives the image circle in closed form:

    center  C(r) = (1 - A conj(B) r^2) / (1 - |B|^2 r^2)
    radius  R(r) = |A - B| r / (1 - |B|^2 r^2)

and, in the degenerate case |B| r = 1, the boundary line

    Re(conj(q) w) = (1 - |A|^2 r^2) / 2,   q = 1 - A conj(B) r^2,

with the image half-plane on the side of q. Everything downstream
(powered envelopes, radius formulas, the sampling oracle) consumes this
geometry, so the invariants here are checked aggressively: boundary
points of |z| = r must land on the reported circle to near machine
precision.

The tilt of the image is the angle tau(r) = arg C(r), computed with the
two-argument arctangent so every quadrant is handled, and the half-angle
subtended at the origin is zeta(r) = asin(|A - B| r / |1 - A conj(B) r^2|),
defined whenever the origin is not interior to the image.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateMapError, OutOfRangeError, ParameterError, PoleOnBoundaryError

_EPS = 1e-12


@dataclass(frozen=True)
class JanowskiParams:
    """Parameters of the powered, shifted map (1-gamma)((1+Az)/(1+Bz))^alpha + gamma.

    alpha is the power in (0, 1] and gamma != 1 the affine shift; the
    plain first-order map is alpha = 1, gamma = 0. Construction validates
    A != B and |B| <= 1. `argument_safe` reports whether the origin stays
    out of the open first-order image of the unit disk, the condition
    under which powers and arguments of the map are single-valued.
    """

    A: complex
    B: complex
    alpha: float = 1.0
    gamma: complex = 0.0

    def __post_init__(self):
        object.__setattr__(self, "A", complex(self.A))
        object.__setattr__(self, "B", complex(self.B))
        object.__setattr__(self, "gamma", complex(self.gamma))
        if abs(self.A - self.B) <= _EPS:
            raise DegenerateMapError("A and B must differ")
        if abs(self.B) > 1.0 + _EPS:
            raise OutOfRangeError(f"|B| must be <= 1, got {abs(self.B)}")
        if not 0.0 < self.alpha <= 1.0:
            raise OutOfRangeError(f"alpha must lie in (0, 1], got {self.alpha}")
        if abs(self.gamma - 1.0) <= _EPS:
            raise ParameterError("gamma = 1 collapses the shifted map to a constant")

    @property
    def argument_safe(self) -> bool:
        """True when |A - B| <= |1 - A conj(B)|, i.e. 0 is not interior at r = 1."""
        return abs(self.A - self.B) <= abs(1.0 - self.A * self.B.conjugate()) + _EPS


@dataclass(frozen=True)
class DiskGeometry:
    """Image of |z| = r: a disk (center/radius) or a half-plane.

    Half-planes are stored as {w : Re(conj(normal) w) > offset} with a
    unit normal pointing into the region; `point` is the boundary point
    nearest the origin. `tau` is the tilt angle of the geometry and
    `zeta` the half-angle it subtends at the origin (None when the
    origin is interior, where no tangent rays exist).
    """

    kind: str  # "disk" or "half-plane"
    center: complex | None = None
    radius: float | None = None
    normal: complex | None = None
    offset: float | None = None
    tau: float = 0.0
    zeta: float | None = None

    @property
    def is_disk(self) -> bool:
        return self.kind == "disk"

    @property
    def point(self) -> complex | None:
        """Boundary point of a half-plane nearest the origin."""
        if self.kind != "half-plane":
            return None
        return self.offset * self.normal

    def boundary_points(self, n: int = 1024) -> np.ndarray:
        """n points on the boundary (circle for disks, a symmetric span of the line)."""
        if self.is_disk:
            t = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
            return self.center + self.radius * np.exp(1j * t)
        tangent = 1j * self.normal
        s = np.linspace(-10.0, 10.0, n)
        return self.point + s * tangent


@dataclass(frozen=True)
class CanonicalParams:
    """Rotated parameters (A', b) with the same image geometry and B' = -b real."""

    a_prime: complex
    b: float


def eval_map(p: JanowskiParams, z) -> complex | np.ndarray:
    """First-order value (1 + A z) / (1 + B z); scalar or array z."""
    z = np.asarray(z, dtype=complex)
    denom = 1.0 + p.B * z
    if np.min(np.abs(denom)) < 1e-14:
        raise PoleOnBoundaryError("z hits the pole of the first-order map")
    out = (1.0 + p.A * z) / denom
    return complex(out) if out.ndim == 0 else out


def image_disk(p: JanowskiParams, r: float) -> DiskGeometry:
    """Closed-form image of the circle |z| = r under the first-order map."""
    if not 0.0 < r <= 1.0:
        raise OutOfRangeError(f"r must lie in (0, 1], got {r}")
    A, B = p.A, p.B
    q = 1.0 - A * B.conjugate() * r * r
    denom = 1.0 - abs(B) ** 2 * r * r
    if abs(denom) <= _EPS:
        # Circle through the pole: the image degenerates to the line
        # Re(conj(q) w) = (1 - |A|^2 r^2) / 2. q = 0 would need A = B.
        c = 0.5 * (1.0 - abs(A) ** 2 * r * r)
        normal = q / abs(q)
        offset = c / abs(q)
        zeta = 0.5 * math.pi if offset >= -_EPS else None
        return DiskGeometry(
            kind="half-plane",
            normal=normal,
            offset=offset,
            tau=cmath.phase(q),
            zeta=zeta,
        )
    center = q / denom
    radius = abs(A - B) * r / denom
    zeta: float | None
    if radius <= abs(center) + _EPS:
        zeta = math.asin(min(1.0, radius / abs(center)))
    else:
        zeta = None
    return DiskGeometry(
        kind="disk",
        center=center,
        radius=radius,
        tau=cmath.phase(q),
        zeta=zeta,
    )


def origin_position(p: JanowskiParams) -> str:
    """Position of w = 0 relative to the image of the unit circle.

    Exterior iff |A| < 1, boundary iff |A| = 1, interior iff |A| > 1;
    the same criterion covers the half-plane case |B| = 1.
    """
    a = abs(p.A)
    if a < 1.0 - _EPS:
        return "exterior"
    if a > 1.0 + _EPS:
        return "interior"
    return "boundary"


def canonicalize(p: JanowskiParams) -> CanonicalParams:
    """Rotate (A, B) to the normal form (A', -b) with b = |B| >= 0.

    The image circle depends on A conj(B) and |A - B| only, so rotating
    both parameters by the phase that carries B to -|B| leaves C(r) and
    R(r) unchanged: A' = A exp(-i (arg B - pi)). B = 0 needs no rotation.
    """
    if p.B == 0:
        return CanonicalParams(a_prime=p.A, b=0.0)
    phase = cmath.phase(p.B) - math.pi
    return CanonicalParams(a_prime=p.A * cmath.exp(-1j * phase), b=abs(p.B))


def contains(outer: DiskGeometry, inner: DiskGeometry, tol: float = 1e-12) -> bool:
    """Whether the closed region `inner` sits inside the closed region `outer`.

    Disk in disk reduces to |C1 - C2| + R1 <= R2; disk in half-plane to a
    signed-distance test; half-plane in half-plane to equal normals with
    the inner boundary at least as deep. A half-plane never fits in a disk.
    """
    if inner.is_disk and outer.is_disk:
        return abs(inner.center - outer.center) + inner.radius <= outer.radius + tol
    if inner.is_disk and not outer.is_disk:
        depth = (outer.normal.conjugate() * inner.center).real - outer.offset
        return depth >= inner.radius - tol
    if not inner.is_disk and not outer.is_disk:
        if abs(inner.normal - outer.normal) > 1e-9:
            return False
        return inner.offset >= outer.offset - tol
    return False
