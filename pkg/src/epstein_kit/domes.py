"""Domes of small plane domains and the nearest-point retraction onto them.

The dome of a domain is the boundary of the hyperbolic convex hull of its
complement.  For the domains handled here it is finitely bent: a few pieces of
geodesic planes (faces) meeting along complete geodesics (ridges).

The retraction sends z to the first point of the dome met by horospheres based
at z as they grow, i.e. the dome point of largest visual density at z.  That
point is either the projection of z to one face plane (when the foot lies in
the face) or the foot of the perpendicular from z to a ridge, so it suffices
to compare those finitely many candidates.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

import numpy as np

from .domains import ConformalMetric, PlaneDomain, SlitPlane, TwoDiskUnion, UnitDisk, _disk_grid
from .epstein import EpsteinInput, epstein_frame
from .errors import DomainError, GeometryError, UnsupportedError
from .halfspace import (
    GeodesicPlane,
    H3Point,
    hyperbolic_distance,
    mobius_act,
    project_to_geodesic,
    project_to_plane,
    visual_metric,
)
from .metrics import pullback_metric, slit_thurston_metric, thurston_metric
from .riemann_sphere import INF, MobiusMap, RoundDisk
from .schwarzian import catalog

__all__ = [
    "DomeFace",
    "DomeRidge",
    "FinitelyBentDome",
    "FiniteBendingData",
    "IdentityCheck",
    "build_dome",
    "dome_retract",
    "dome_path_distance",
    "dome_epstein_identity_check",
    "lipschitz_estimate",
    "geodesic_points",
]


@dataclass(frozen=True)
class DomeFace:
    """A piece of the plane over ``plane.boundary``; that disk lies in the domain.

    ``region`` tells whether a point of the plane belongs to the piece and
    ``anchor`` is a point at infinity on the piece's boundary away from the
    ridges (used to orient unfoldings).
    """

    plane: GeodesicPlane
    region: Callable[[H3Point], bool]
    anchor: complex


@dataclass(frozen=True)
class DomeRidge:
    start: object
    end: object
    angle: float
    faces: tuple

    def points(self, n: int = 9) -> list:
        return geodesic_points(self.start, self.end, n)


@dataclass(frozen=True)
class FiniteBendingData:
    """Bending weights (angle, length) on disjoint geodesics."""

    entries: tuple

    def __post_init__(self):
        for _, angle, length in self.entries:
            if not angle > 0:
                raise GeometryError("bending angles must be positive")
            if not length > 0:
                raise GeometryError("bending lengths must be positive")

    @property
    def finite(self) -> bool:
        return all(math.isfinite(length) for _, _, length in self.entries)

    def length(self) -> float:
        """Sum of angle times length."""
        if not self.finite:
            raise UnsupportedError("bending length is undefined with an infinite geodesic")
        return float(sum(angle * length for _, angle, length in self.entries))


@dataclass(frozen=True)
class FinitelyBentDome:
    domain: PlaneDomain
    faces: tuple
    ridges: tuple = field(default=())

    def bending_data(self) -> FiniteBendingData:
        return FiniteBendingData(tuple(((r.start, r.end), r.angle, math.inf) for r in self.ridges))


def geodesic_points(p, q, n: int = 9) -> list:
    """n points spread along the geodesic with endpoints p, q."""
    s = np.linspace(-3.0, 3.0, n)
    if q is INF or p is INF:
        base = p if q is INF else q
        return [H3Point(complex(base), float(math.exp(v))) for v in s]
    c, r = (p + q) / 2, abs(q - p) / 2
    u = (q - p) / abs(q - p)
    # arc-length parameter along the semicircle: position tanh, height sech
    return [H3Point(c + r * math.tanh(v) * u, r / math.cosh(v)) for v in s]


def _plane_normal(plane: GeodesicPlane, x: H3Point) -> np.ndarray:
    # Euclidean gradient of the extended form, pointing away from the disk side
    d = plane.boundary
    g = 2.0 * d.A * x.xi + 2.0 * d.B
    n = np.array([g.real, g.imag, 2.0 * d.A * x.t])
    return n / np.linalg.norm(n)


def _exterior_angle(f1: DomeFace, f2: DomeFace, x: H3Point) -> float:
    c = float(np.dot(_plane_normal(f1.plane, x), _plane_normal(f2.plane, x)))
    return math.acos(max(-1.0, min(1.0, c)))


def _disk_dome(domain: UnitDisk) -> FinitelyBentDome:
    face = DomeFace(GeodesicPlane(RoundDisk.unit()), lambda x: True, 1.0 + 0j)
    return FinitelyBentDome(domain, (face,))


def _two_disk_dome(domain: TwoDiskUnion) -> FinitelyBentDome:
    a = domain.a
    right = DomeFace(GeodesicPlane(RoundDisk.circle(a, 1.0)), lambda x: x.xi.real >= -1e-12, complex(a + 1))
    left = DomeFace(GeodesicPlane(RoundDisk.circle(-a, 1.0)), lambda x: x.xi.real <= 1e-12, complex(-a - 1))
    lo, hi = domain.corners
    top = H3Point(0j, math.sqrt(1.0 - a * a))
    ridge = DomeRidge(lo, hi, _exterior_angle(right, left, top), (0, 1))
    return FinitelyBentDome(domain, (right, left), (ridge,))


def _slit_dome(domain: SlitPlane) -> FinitelyBentDome:
    tip = domain.tip
    # the vertical half-plane over the slit, seen from above and from below
    upper = DomeFace(GeodesicPlane(RoundDisk.upper_half_plane()), lambda x: x.xi.real <= tip + 1e-12,
                     complex(tip - 1))
    lower = DomeFace(GeodesicPlane(RoundDisk.half_plane(0.0, -1.0)), lambda x: x.xi.real <= tip + 1e-12,
                     complex(tip - 1))
    ridge = DomeRidge(complex(tip), INF, _exterior_angle(upper, lower, H3Point(complex(tip), 1.0)), (0, 1))
    return FinitelyBentDome(domain, (upper, lower), (ridge,))


_BUILDERS = {UnitDisk: _disk_dome, TwoDiskUnion: _two_disk_dome, SlitPlane: _slit_dome}


def build_dome(domain: PlaneDomain) -> FinitelyBentDome:
    try:
        builder = _BUILDERS[type(domain)]
    except KeyError:
        raise UnsupportedError(f"no dome construction for the {domain.tag}") from None
    return builder(domain)


def _retract(dome: FinitelyBentDome, z):
    """(dome point, face label) for z in the domain."""
    if z is INF or not dome.domain.contains(z):
        raise DomainError(f"{z!r} is not in the {dome.domain.tag}")
    z = complex(z)
    best = None
    for i, face in enumerate(dome.faces):
        if face.plane.boundary.contains(z):
            x = project_to_plane(face.plane, z)
            if face.region(x):
                cand = (visual_metric(x, z), x, i)
                best = cand if best is None or cand[0] > best[0] else best
    for ridge in dome.ridges:
        x = project_to_geodesic(ridge.start, ridge.end, z)
        side = next((i for i in ridge.faces if dome.faces[i].plane.boundary.contains(z)), ridge.faces[0])
        cand = (visual_metric(x, z), x, side)
        best = cand if best is None or cand[0] > best[0] else best
    return best[1], best[2]


def dome_retract(dome: FinitelyBentDome, z) -> H3Point:
    """Nearest-point retraction of z onto the dome."""
    return _retract(dome, z)[0]


def _unfolding(dome: FinitelyBentDome, ridge: DomeRidge, i: int, j: int) -> MobiusMap:
    # rotation about the ridge carrying face j into the extension of face i's plane
    T = MobiusMap.from_three_points(ridge.start, dome.faces[i].anchor, ridge.end)
    beta = cmath.phase(complex(T(dome.faces[j].anchor)))
    turn = MobiusMap.scaling(cmath.exp(1j * (math.pi - beta)))
    return T.inverse() @ turn @ T


def dome_path_distance(dome: FinitelyBentDome, z1, z2) -> float:
    """Path distance on the dome between the retractions of z1 and z2.

    Exact within a face; across a ridge the second face is unfolded into the
    first face's plane, which is valid for domes with a single ridge.
    """
    x1, i = _retract(dome, z1)
    x2, j = _retract(dome, z2)
    if i == j:
        return hyperbolic_distance(x1, x2)
    ridge = next((r for r in dome.ridges if set(r.faces) == {i, j}), None)
    if ridge is None or len(dome.ridges) > 1:
        raise UnsupportedError("path distance needs a single ridge between the faces")
    return hyperbolic_distance(x1, mobius_act(_unfolding(dome, ridge, i, j), x2))


class IdentityCheck(NamedTuple):
    residual: float
    witness_residual: float
    envelope_residual: float
    samples: int


def _identity_samples(domain: PlaneDomain, n: int) -> np.ndarray:
    if isinstance(domain, UnitDisk):
        pts = _disk_grid(11, 9, max_distance=3.5)
    else:
        pts = domain.sample_points(10, 12)
    idx = np.unique(np.linspace(0, len(pts) - 1, n).round().astype(int))
    return pts[idx]


def _envelope_route(domain):
    """(map, metric on its source) whose Epstein surface should be the dome, if known."""
    if isinstance(domain, UnitDisk):
        return catalog("identity"), ConformalMetric.hyperbolic(domain), lambda w: w
    if isinstance(domain, SlitPlane) and domain.tip == -0.25:
        k = catalog("koebe")

        def source(w):
            s = cmath.sqrt(1 + 4 * w)
            return (s - 1) / (s + 1)

        return k, pullback_metric(k, slit_thurston_metric(domain)), source
    return None


def dome_epstein_identity_check(domain: PlaneDomain, samples=None, n: int = 100) -> IdentityCheck:
    """Largest hyperbolic distance between the dome retraction and the Epstein point.

    Two routes are compared with the retraction: the point over the Thurston
    witness disk, and where the Thurston metric is known in closed form, the
    Epstein envelope of that metric pulled back by a uniformizing map.
    """
    dome = build_dome(domain)
    pts = _identity_samples(domain, n) if samples is None else np.asarray(samples, dtype=complex)
    route = _envelope_route(domain)
    witness = envelope = 0.0
    for w in pts:
        w = complex(w)
        r = dome_retract(dome, w)
        witness = max(witness, hyperbolic_distance(r, thurston_metric(domain, w).point))
        if route is not None:
            f, rho, source = route
            x = epstein_frame(EpsteinInput(f, rho), source(w)).point
            envelope = max(envelope, hyperbolic_distance(r, x))
    return IdentityCheck(max(witness, envelope), witness, envelope if route else math.nan, len(pts))


def lipschitz_estimate(domain: PlaneDomain, metric: str = "hyperbolic", samples=None,
                       step: float = 1e-3, directions: int = 8) -> float:
    """Largest sampled ratio of dome path distance to domain distance.

    Pairs are (z, z + step * d(z) * e^{i theta}) with d the Euclidean distance
    to the boundary.  ``metric`` is "hyperbolic" (exact distance of the domain)
    or "thurston" (Thurston density at the midpoint times the Euclidean gap).
    """
    dome = build_dome(domain)
    if metric == "hyperbolic":

        def denominator(z1, z2):
            return domain.hyperbolic_distance(z1, z2)
    elif metric == "thurston":
        def denominator(z1, z2):
            return thurston_metric(domain, (z1 + z2) / 2).density * abs(z1 - z2)
    else:
        raise UnsupportedError(f"unknown metric source {metric!r}")
    pts = domain.sample_points(6, 12) if samples is None else samples
    best = 0.0
    for z in pts:
        z = complex(z)
        r = step * domain.distance_to_boundary(z)
        for k in range(directions):
            z2 = z + r * cmath.exp(2j * math.pi * (k + 0.5) / directions)
            best = max(best, dome_path_distance(dome, z, z2) / denominator(z, z2))
    return best
