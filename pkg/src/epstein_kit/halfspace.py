"""Upper half-space model of hyperbolic 3-space.

Points are ``(xi, t)`` with ``xi`` complex and height ``t > 0``.  Tangent
directions are stored as Euclidean unit 3-vectors ``(Re dxi, Im dxi, dt)``;
the corresponding hyperbolic unit vector is ``t`` times that vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, GeometryError
from .riemann_sphere import (
    INF,
    MobiusMap,
    RoundDisk,
    as_point,
    disk_to_unit,
    mobius_apply,
)

__all__ = [
    "H3Point",
    "GeodesicPlane",
    "Horosphere",
    "UnitTangent",
    "visual_metric",
    "horosphere_from",
    "geodesic_flow",
    "flow_arrays",
    "geodesic_endpoints",
    "project_to_plane",
    "project_to_geodesic",
    "hyperbolic_distance",
    "mobius_act",
    "hyperboloid_point",
    "hyperboloid_jacobian",
    "minkowski_dot",
]


@dataclass(frozen=True)
class H3Point:
    xi: complex
    t: float

    def __post_init__(self):
        object.__setattr__(self, "xi", complex(self.xi))
        object.__setattr__(self, "t", float(self.t))
        if not self.t > 0 or not math.isfinite(self.t):
            raise GeometryError(f"height must be positive and finite, got {self.t}")

    def as_array(self) -> np.ndarray:
        return np.array([self.xi.real, self.xi.imag, self.t])


@dataclass(frozen=True)
class GeodesicPlane:
    """Totally geodesic plane spanned by the circle ``boundary``.

    The side of the plane facing ``boundary``'s disk is where
    ``boundary.halfspace_value`` is negative.
    """

    boundary: RoundDisk

    def signed_distance(self, x: H3Point) -> float:
        """Hyperbolic distance from x to the plane, negative on the disk's side."""
        return math.asinh(self.boundary.halfspace_value(x.xi, x.t) / (2.0 * x.t))

    def contains(self, x: H3Point, tol: float = 1e-9) -> bool:
        return abs(self.signed_distance(x)) < tol


@dataclass(frozen=True)
class Horosphere:
    """Horosphere based at ``base``.

    For a finite base this is the Euclidean sphere of radius
    ``euclidean_radius`` tangent to the plane at ``base``; for ``base = INF``
    the field holds the height of the horizontal plane instead.
    """

    base: object
    euclidean_radius: float

    def __post_init__(self):
        object.__setattr__(self, "base", as_point(self.base))
        if not self.euclidean_radius > 0:
            raise GeometryError("horosphere size must be positive")

    @property
    def top(self) -> H3Point:
        if self.base is INF:
            raise GeometryError("a horosphere at infinity has no top point")
        return H3Point(self.base, 2.0 * self.euclidean_radius)

    def residual(self, x: H3Point) -> float:
        """Euclidean offset of x from the horosphere (0 on it, < 0 inside)."""
        if self.base is INF:
            return self.euclidean_radius - x.t
        r = self.euclidean_radius
        return math.hypot(abs(x.xi - self.base), x.t - r) - r


@dataclass(frozen=True)
class UnitTangent:
    base: H3Point
    direction: tuple

    def __post_init__(self):
        d = np.asarray(self.direction, dtype=float).reshape(3)
        n = np.linalg.norm(d)
        if not n > 0:
            raise GeometryError("direction must be nonzero")
        object.__setattr__(self, "direction", tuple(float(v) for v in d / n))

    @property
    def horizontal(self) -> complex:
        return complex(self.direction[0], self.direction[1])

    @property
    def vertical(self) -> float:
        return self.direction[2]

    def hyperbolic_vector(self) -> np.ndarray:
        """Components of the direction scaled to hyperbolic unit length."""
        return self.base.t * np.asarray(self.direction)


def visual_metric(x: H3Point, z) -> float:
    """Density at ``z`` of the visual metric seen from ``x``.

    At ``z = INF`` the value refers to the chart ``-1/z``.
    """
    z = as_point(z)
    if z is INF:
        return 2.0 * x.t
    return 2.0 * x.t / (x.t * x.t + abs(z - x.xi) ** 2)


def horosphere_from(z, rho: float) -> Horosphere:
    """The horosphere of points seeing ``z`` with visual density ``rho``."""
    if not rho > 0:
        raise DomainError("density must be positive")
    z = as_point(z)
    if z is INF:
        return Horosphere(INF, rho / 2.0)
    return Horosphere(z, 1.0 / rho)


def mobius_act(m: MobiusMap, x: H3Point) -> H3Point:
    """Poincare extension of a Mobius map to the half-space."""
    a, b, c, d = m.a, m.b, m.c, m.d
    q = c * x.xi + d
    den = abs(q) ** 2 + abs(c) ** 2 * x.t**2
    xi = ((a * x.xi + b) * q.conjugate() + a * c.conjugate() * x.t**2) / den
    return H3Point(xi, x.t / den)


def _one_minus_plus(b, a):
    # 1 - b and 1 + b with no cancellation when |b| is close to 1
    b, a = np.asarray(b, dtype=float), np.asarray(a, dtype=float)
    pos = b > 0
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(pos, a * a / (1.0 + b), 1.0 - b), np.where(pos, 1.0 + b, a * a / (1.0 - b))


def flow_arrays(xi, t, h, b, s):
    """Vectorized geodesic flow.

    ``(h, b)`` is the Euclidean unit direction split into horizontal (complex)
    and vertical parts.  Returns the moved ``(xi, t, h, b)``.
    """
    h = np.asarray(h, dtype=complex)
    omb, opb = _one_minus_plus(b, np.abs(h))
    es, ems = np.exp(s), np.exp(-np.asarray(s, dtype=float))
    den = 0.5 * (omb * es + opb * ems)  # cosh s - b sinh s
    sh = 0.5 * (es - ems)
    # vertical component (b cosh s - sinh s) / den
    return xi + h * t * sh / den, t / den, h / den, 0.5 * (opb * ems - omb * es) / den


def geodesic_flow(v: UnitTangent, s: float) -> UnitTangent:
    """Move ``v`` a hyperbolic distance ``s`` along its geodesic."""
    xi, t, h, b = flow_arrays(v.base.xi, v.base.t, v.horizontal, v.vertical, s)
    h = complex(h)
    return UnitTangent(H3Point(complex(xi), float(t)), (h.real, h.imag, float(b)))


def geodesic_endpoints(v: UnitTangent):
    """(backward, forward) endpoints on the sphere at infinity of v's geodesic."""
    h, b, t = v.horizontal, v.vertical, v.base.t
    a = abs(h)
    omb, opb = (float(v) for v in _one_minus_plus(b, a))
    fwd = INF if omb == 0 else as_point(v.base.xi + h * t / omb)
    bwd = INF if opb == 0 else as_point(v.base.xi - h * t / opb)
    return bwd, fwd


def project_to_plane(p: GeodesicPlane, z) -> H3Point:
    """Nearest point of the plane to the boundary point z (horosphere tangency)."""
    if p.boundary.form(z) == 0:
        raise DomainError("point lies on the boundary circle")
    if p.boundary.form(z) > 0:
        raise DomainError("point is not on the disk's side of the plane")
    m = disk_to_unit(p.boundary, z)
    return mobius_act(m.inverse(), H3Point(0.0, 1.0))


def project_to_geodesic(p, q, z) -> H3Point:
    """Foot of the perpendicular from boundary point z to the geodesic (p, q)."""
    p, q, z = as_point(p), as_point(q), as_point(z)
    if p == q:
        raise GeometryError("geodesic endpoints coincide")
    if z == p or z == q:
        raise DomainError("point is an endpoint of the geodesic")
    if q is INF:
        m = MobiusMap(1, -p, 0, 1)
    elif p is INF:
        m = MobiusMap(0, 1, 1, -q)
    else:
        m = MobiusMap(1, -p, 1, -q)
    w = mobius_apply(m, z)
    return mobius_act(m.inverse(), H3Point(0.0, abs(w)))


def hyperbolic_distance(x: H3Point, y: H3Point) -> float:
    chord = math.hypot(abs(x.xi - y.xi), x.t - y.t)
    return 2.0 * math.asinh(chord / (2.0 * math.sqrt(x.t * y.t)))


def hyperboloid_point(x: H3Point) -> np.ndarray:
    """Image of x on the hyperboloid <X, X> = -1, X0 > 0."""
    u, v, t = x.xi.real, x.xi.imag, x.t
    s = u * u + v * v
    return np.array([(s + t * t + 1) / (2 * t), (s + t * t - 1) / (2 * t), u / t, v / t])


def hyperboloid_jacobian(x: H3Point) -> np.ndarray:
    """Derivative of :func:`hyperboloid_point` in (Re xi, Im xi, t)."""
    u, v, t = x.xi.real, x.xi.imag, x.t
    s = u * u + v * v
    return np.array(
        [
            [u / t, v / t, (t * t - s - 1) / (2 * t * t)],
            [u / t, v / t, (t * t - s + 1) / (2 * t * t)],
            [1 / t, 0.0, -u / t**2],
            [0.0, 1 / t, -v / t**2],
        ]
    )


def minkowski_dot(a, b) -> float:
    a = np.asarray(a)
    b = np.asarray(b)
    return float(-a[..., 0] * b[..., 0] + np.sum(a[..., 1:] * b[..., 1:], axis=-1))
