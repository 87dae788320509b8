"""Catalogued plane domains and conformal metrics on them.

Each domain knows its membership predicate, exact Euclidean distance to the
boundary, its boundary as a list of circular arcs (for the simply connected
ones) and, where a closed form exists, its curvature -1 hyperbolic density
together with the log-derivative ``d/dz log density``.

Boundary arcs are triples ``(start, middle, end)`` of points of the Riemann
sphere; the arc is the piece of the circle through the three points that runs
from ``start`` to ``end`` through ``middle``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, UnsupportedError
from .riemann_sphere import INF, MobiusMap

__all__ = [
    "PlaneDomain",
    "UnitDisk",
    "UpperHalfPlane",
    "Annulus",
    "SlitPlane",
    "TwoDiskUnion",
    "Strip",
    "Sector",
    "ConformalMetric",
    "domain_from_name",
    "boundary_samples",
]


def _disk_grid(levels: int, angles: int, max_distance: float = 4.0) -> np.ndarray:
    # hyperbolically equispaced polar grid in the unit disk
    d = np.linspace(0.0, max_distance, levels + 1)[1:]
    r = np.tanh(d / 2.0)
    th = 2 * np.pi * (np.arange(angles) + 0.5) / angles
    pts = (r[:, None] * np.exp(1j * th)[None, :]).ravel()
    return np.concatenate([[0.0 + 0.0j], pts])


def _half_plane_distance(chord: float, h1: float, h2: float) -> float:
    return 2.0 * math.asinh(chord / (2.0 * math.sqrt(h1 * h2)))


class PlaneDomain:
    """Base class; subclasses fill in the geometry."""

    tag = "domain"
    simply_connected = True

    def contains(self, z) -> bool:
        raise NotImplementedError

    def distance_to_boundary(self, z: complex) -> float:
        raise NotImplementedError

    def boundary_arcs(self) -> list:
        raise UnsupportedError(f"{self.tag}: boundary arcs not available")

    def hyperbolic_density(self, z):
        raise UnsupportedError(f"{self.tag}: no closed-form hyperbolic metric")

    def hyperbolic_dlog(self, z):
        raise UnsupportedError(f"{self.tag}: no closed-form hyperbolic metric")

    def hyperbolic_distance(self, z1: complex, z2: complex) -> float:
        raise UnsupportedError(f"{self.tag}: no closed-form hyperbolic distance")

    def sample_points(self, levels: int = 12, angles: int = 24) -> np.ndarray:
        raise NotImplementedError

    def contains_disk(self, center: complex, radius: float) -> bool:
        """Whether the open Euclidean disk lies in the domain."""
        return self.contains(center) and radius <= self.distance_to_boundary(center)

    def _check(self, z):
        if z is INF or not self.contains(z):
            raise DomainError(f"{z!r} is not in the {self.tag}")

    def __repr__(self):
        return f"{type(self).__name__}()"


@dataclass(frozen=True)
class UnitDisk(PlaneDomain):
    tag = "disk"

    def contains(self, z):
        return z is not INF and abs(z) < 1

    def distance_to_boundary(self, z):
        return 1.0 - abs(z)

    def boundary_arcs(self):
        return [(1.0 + 0j, 1j, -1.0 + 0j), (-1.0 + 0j, -1j, 1.0 + 0j)]

    def hyperbolic_density(self, z):
        return 2.0 / (1.0 - np.abs(z) ** 2)

    def hyperbolic_dlog(self, z):
        return np.conj(z) / (1.0 - np.abs(z) ** 2)

    def hyperbolic_distance(self, z1, z2):
        return 2.0 * math.atanh(abs(z1 - z2) / abs(1.0 - z1.conjugate() * z2))

    def sample_points(self, levels=12, angles=24):
        return _disk_grid(levels, angles)


@dataclass(frozen=True)
class UpperHalfPlane(PlaneDomain):
    tag = "half-plane"

    def contains(self, z):
        return z is not INF and z.imag > 0

    def distance_to_boundary(self, z):
        return z.imag

    def boundary_arcs(self):
        return [(-1.0 + 0j, 0j, 1.0 + 0j), (1.0 + 0j, INF, -1.0 + 0j)]

    def hyperbolic_density(self, z):
        return 1.0 / np.imag(z)

    def hyperbolic_dlog(self, z):
        return 0.5j / np.imag(z)

    def hyperbolic_distance(self, z1, z2):
        return _half_plane_distance(abs(z1 - z2), z1.imag, z2.imag)

    def sample_points(self, levels=12, angles=24):
        w = _disk_grid(levels, angles)
        return 1j * (1 + w) / (1 - w)


@dataclass(frozen=True)
class Annulus(PlaneDomain):
    """The round annulus 1/R < |z| < R."""

    R: float

    tag = "annulus"
    simply_connected = False

    def __post_init__(self):
        if not self.R > 1:
            raise DomainError("annulus needs R > 1")

    @property
    def alpha(self) -> float:
        return 2.0 * math.log(self.R) / math.pi

    @property
    def core_length(self) -> float:
        """Hyperbolic length of the core geodesic |z| = 1."""
        return math.pi**2 / math.log(self.R)

    def contains(self, z):
        return z is not INF and 1.0 / self.R < abs(z) < self.R

    def distance_to_boundary(self, z):
        r = abs(z)
        return min(self.R - r, r - 1.0 / self.R)

    def angle(self, z):
        """Position across the annulus in (0, pi); pi/2 on the core."""
        return np.log(self.R * np.abs(z)) / self.alpha

    def hyperbolic_density(self, z):
        return 1.0 / (self.alpha * np.abs(z) * np.sin(self.angle(z)))

    def hyperbolic_dlog(self, z):
        return -0.5 / z - 0.5 / (np.tan(self.angle(z)) * self.alpha * z)

    def core_distance(self, z):
        """Hyperbolic distance from z to the core geodesic |z| = 1."""
        # along a radius the arc length element is d(angle) / sin(angle)
        return np.abs(np.log(np.tan(self.angle(z) / 2.0)))

    def injectivity_radius(self, z):
        d = self.core_distance(z)
        return np.arcsinh(np.sinh(self.core_length / 2.0) * np.cosh(d))

    def sample_points(self, levels=12, angles=24):
        u = np.log(self.R) * np.linspace(-1, 1, levels + 2)[1:-1]
        th = 2 * np.pi * (np.arange(angles) + 0.5) / angles
        return (np.exp(u)[:, None] * np.exp(1j * th)[None, :]).ravel()


@dataclass(frozen=True)
class SlitPlane(PlaneDomain):
    """The plane minus the ray (-inf, tip]; the Koebe image of the disk for tip = -1/4."""

    tip: float = -0.25

    tag = "slit-plane"

    def contains(self, z):
        if z is INF:
            return False
        return not (z.imag == 0 and z.real <= self.tip)

    def distance_to_boundary(self, z):
        if z.real <= self.tip:
            return abs(z.imag)
        return abs(z - self.tip)

    def boundary_arcs(self):
        t = complex(self.tip)
        return [(t, t - 1.0, INF)]

    def _root(self, z):
        # s = sqrt(1 + 4 w) where w is z translated so the slit starts at -1/4;
        # w = k((s - 1) / (s + 1)) for the Koebe map k
        return np.sqrt(4.0 * (np.asarray(z) - self.tip) + 0j)

    def hyperbolic_density(self, z):
        s = self._root(z)
        return 2.0 / (np.abs(s) * s.real)

    def hyperbolic_dlog(self, z):
        s = self._root(z)
        return -1.0 / s**2 - 1.0 / (s * s.real)

    def hyperbolic_distance(self, z1, z2):
        # the root maps onto the right half-plane isometrically
        s1, s2 = complex(self._root(z1)), complex(self._root(z2))
        return _half_plane_distance(abs(s1 - s2), s1.real, s2.real)

    def sample_points(self, levels=12, angles=24):
        w = _disk_grid(levels, angles)
        return self.tip + 0.25 + w / (1 - w) ** 2


@dataclass(frozen=True)
class TwoDiskUnion(PlaneDomain):
    """Union of the unit disks centered at a and -a, 0 < a < 1."""

    a: float = 0.5

    tag = "two-disk-union"

    def __post_init__(self):
        if not 0 < self.a < 1:
            raise DomainError("two-disk union needs 0 < a < 1")

    @property
    def corners(self):
        """The two boundary intersection points, lower then upper."""
        s = math.sqrt(1.0 - self.a**2)
        return -1j * s, 1j * s

    def contains(self, z):
        if z is INF:
            return False
        return abs(z - self.a) < 1 or abs(z + self.a) < 1

    def _arc_distance(self, z, center, side):
        # distance to the outer arc of the unit circle about center,
        # the part with side * Re >= 0
        v = z - center
        if abs(v) > 0:
            p = center + v / abs(v)
            if side * p.real >= 0:
                return abs(abs(v) - 1.0)
        lo, hi = self.corners
        return min(abs(z - lo), abs(z - hi))

    def distance_to_boundary(self, z):
        return min(self._arc_distance(z, self.a, 1), self._arc_distance(z, -self.a, -1))

    def boundary_arcs(self):
        lo, hi = self.corners
        return [(lo, complex(self.a + 1), hi), (hi, complex(-self.a - 1), lo)]

    def sample_points(self, levels=12, angles=24):
        w = _disk_grid(levels, angles, max_distance=3.5)
        right = w + self.a
        left = w - self.a
        # keep each point of the overlap once
        return np.concatenate([right, left[np.abs(left - self.a) >= 1]])


@dataclass(frozen=True)
class Strip(PlaneDomain):
    """The horizontal strip |Im z| < pi/2, image of the disk under log((1+z)/(1-z))."""

    tag = "strip"

    def contains(self, z):
        return z is not INF and abs(z.imag) < math.pi / 2

    def distance_to_boundary(self, z):
        return math.pi / 2 - abs(z.imag)

    def boundary_arcs(self):
        h = 0.5j * math.pi
        return [
            (h - 1, h, h + 1),
            (h + 1, INF, h - 1),
            (-h - 1, -h, -h + 1),
            (-h + 1, INF, -h - 1),
        ]

    def hyperbolic_density(self, z):
        return 1.0 / np.cos(np.imag(z))

    def hyperbolic_dlog(self, z):
        return -0.5j * np.tan(np.imag(z))

    def sample_points(self, levels=12, angles=24):
        w = _disk_grid(levels, angles)
        return np.log((1 + w) / (1 - w))


@dataclass(frozen=True)
class Sector(PlaneDomain):
    """The sector |arg z| < half_angle, 0 < half_angle <= pi."""

    half_angle: float = math.pi / 2

    tag = "sector"

    def __post_init__(self):
        if not 0 < self.half_angle <= math.pi:
            raise DomainError("sector half-angle must lie in (0, pi]")

    @property
    def exponent(self) -> float:
        # z -> z ** (1 / exponent) opens the sector onto the right half-plane
        return 2.0 * self.half_angle / math.pi

    def contains(self, z):
        if z is INF or z == 0:
            return False
        return abs(cmath.phase(z)) < self.half_angle

    def distance_to_boundary(self, z):
        ph = abs(cmath.phase(z))
        gap = self.half_angle - ph
        if gap >= math.pi / 2:
            return abs(z)
        return abs(z) * math.sin(gap)

    def boundary_arcs(self):
        e = cmath.exp(1j * self.half_angle)
        return [(0j, e, INF), (0j, e.conjugate(), INF)]

    def hyperbolic_density(self, z):
        c = self.exponent
        g = np.asarray(z, dtype=complex) ** (1.0 / c)
        return np.abs(g / (c * np.asarray(z))) / g.real

    def hyperbolic_dlog(self, z):
        c = self.exponent
        z = np.asarray(z, dtype=complex)
        g = z ** (1.0 / c)
        dg = g / (c * z)
        return -dg / (2.0 * g.real) + (1.0 / c - 1.0) / (2.0 * z)

    def sample_points(self, levels=12, angles=24):
        w = _disk_grid(levels, angles)
        return ((1 + w) / (1 - w)) ** self.exponent


class ConformalMetric:
    """A density ``lambda(z) |dz|`` with its log-derivative ``d/dz log lambda``."""

    def __init__(self, density: Callable, dlog: Callable, domain: PlaneDomain | None = None, name: str = ""):
        self.density = density
        self.dlog = dlog
        self.domain = domain
        self.name = name

    def __call__(self, z):
        return self.density(z)

    def __repr__(self):
        return f"ConformalMetric({self.name or 'custom'})"

    @classmethod
    def hyperbolic(cls, domain: PlaneDomain) -> "ConformalMetric":
        return cls(domain.hyperbolic_density, domain.hyperbolic_dlog, domain, f"hyperbolic {domain.tag}")

    @classmethod
    def visual(cls, xi: complex, t: float) -> "ConformalMetric":
        """Visual metric of the half-space point (xi, t), as a metric on the plane."""

        def density(z):
            return 2.0 * t / (t * t + np.abs(z - xi) ** 2)

        def dlog(z):
            return -np.conj(z - xi) / (t * t + np.abs(z - xi) ** 2)

        return cls(density, dlog, None, f"visual ({xi}, {t})")

    def scaled(self, s: float) -> "ConformalMetric":
        """The metric exp(s) * self."""
        k = math.exp(s)
        return ConformalMetric(lambda z: k * self.density(z), self.dlog, self.domain, f"exp({s}) {self.name}")


def domain_from_name(name: str, **params) -> PlaneDomain:
    table = {
        "disk": UnitDisk,
        "half-plane": UpperHalfPlane,
        "annulus": Annulus,
        "slit-plane": SlitPlane,
        "two-disk-union": TwoDiskUnion,
        "two-disks": TwoDiskUnion,
        "strip": Strip,
        "sector": Sector,
    }
    try:
        cls = table[name]
    except KeyError:
        raise UnsupportedError(f"unknown domain {name!r}") from None
    try:
        return cls(**params)
    except TypeError as exc:
        raise DomainError(f"bad parameters for the {name}: {exc}") from None


def boundary_samples(domain: PlaneDomain, n: int = 33, spread: float = 4.0) -> np.ndarray:
    """Finite points along each boundary arc, log-spaced in the cross-ratio parameter."""
    out = []
    for start, middle, end in domain.boundary_arcs():
        back = MobiusMap.from_three_points(start, middle, end).inverse()
        # the arc is the preimage of the ray [0, inf]
        out += [back(x) for x in np.exp(np.linspace(-spread, spread, n))]
        out += [p for p in (start, end) if p is not INF]
    return np.array([complex(p) for p in out if p is not INF])
