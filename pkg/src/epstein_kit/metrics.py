"""Hyperbolic metrics, injectivity radius and the Thurston (projective) metric.

The Thurston density at ``w`` is the infimum of ``rho_D(w)`` over round disks
``D`` in the domain containing ``w``.  After the inversion ``u = 1/(z - w)``
such a disk becomes the exterior of a circle enclosing the image of the
complement, and ``rho_D(w)`` becomes twice that circle's radius.  So the
infimum is twice the radius of the smallest circle enclosing the inverted
boundary, a convex minimax problem in the circle's center.
"""

from __future__ import annotations

import cmath
import math
from typing import NamedTuple

import numpy as np
from scipy import optimize

from .domains import ConformalMetric, PlaneDomain, SlitPlane
from .errors import DomainError, NonConvergenceError, UnsupportedError
from .halfspace import H3Point, mobius_act
from .riemann_sphere import INF, MobiusMap, RoundDisk, disk_map, round_disk_metric

__all__ = [
    "hyperbolic_metric",
    "injectivity_radius",
    "ThurstonMetric",
    "thurston_metric",
    "thurston_pullback",
    "slit_thurston_metric",
    "pullback_metric",
    "enclosing_radius",
]

TWO_PI = 2.0 * math.pi


def hyperbolic_metric(domain: PlaneDomain, z) -> float:
    if z is INF or not domain.contains(z):
        raise DomainError(f"{z!r} is not in the {domain.tag}")
    return float(domain.hyperbolic_density(z))


def injectivity_radius(domain: PlaneDomain, z) -> float:
    if z is INF or not domain.contains(z):
        raise DomainError(f"{z!r} is not in the {domain.tag}")
    if domain.simply_connected:
        return math.inf
    return float(domain.injectivity_radius(z))


class _ImageArc:
    """Image of a boundary arc under u = 1/(z - w)."""

    def __init__(self, arc, w):
        q = [0j if p is INF else 1.0 / (p - w) for p in arc]
        self.q0, self.qm, self.q1 = q
        b, c = self.qm - self.q0, self.q1 - self.q0
        cross = (b.conjugate() * c).imag
        self.is_segment = abs(cross) <= 1e-12 * abs(b) * abs(c)
        if self.is_segment:
            return
        self.center = self.q0 + (abs(b) ** 2 * c - abs(c) ** 2 * b) / (2j * cross)
        self.radius = abs(self.q0 - self.center)
        a0, am, a1 = (cmath.phase(p - self.center) for p in q)
        if (am - a0) % TWO_PI < (a1 - a0) % TWO_PI:
            self.start, self.span = a0, (a1 - a0) % TWO_PI
        else:
            self.start, self.span = a1, (a0 - a1) % TWO_PI

    def farthest(self, u0: complex) -> float:
        ends = max(abs(u0 - self.q0), abs(u0 - self.q1))
        if self.is_segment:
            return ends
        v = self.center - u0
        if abs(v) == 0:
            return self.radius
        if (cmath.phase(v) - self.start) % TWO_PI <= self.span:
            return abs(v) + self.radius
        return ends

    def samples(self, n=9):
        if self.is_segment:
            return [self.q0 + (self.q1 - self.q0) * k / (n - 1) for k in range(n)]
        return [self.center + self.radius * cmath.exp(1j * (self.start + self.span * k / (n - 1))) for k in range(n)]


def enclosing_radius(arcs, u0: complex) -> float:
    """Radius of the smallest circle centered at u0 containing all arcs."""
    return max(a.farthest(u0) for a in arcs)


class ThurstonMetric(NamedTuple):
    density: float
    witness: RoundDisk
    point: H3Point
    center: complex
    radius: float


def _minimize_enclosing(arcs, starts: int = 16):
    """Center and radius of the smallest circle enclosing all arcs."""
    pts = np.array([p for a in arcs for p in a.samples()])
    centroid = complex(pts.mean())
    spread = float(np.max(np.abs(pts - centroid))) or 1.0

    def f(x):
        return enclosing_radius(arcs, complex(x[0], x[1]))

    def run(z0, size, xatol):
        simplex = np.array([[z0.real, z0.imag], [z0.real + size, z0.imag], [z0.real, z0.imag + size]])
        return optimize.minimize(f, [z0.real, z0.imag], method="Nelder-Mead",
                                 options=dict(initial_simplex=simplex, xatol=xatol, fatol=1e-3 * xatol,
                                              maxiter=1000))

    seeds = [centroid] + [centroid + 0.5 * spread * cmath.exp(TWO_PI * 1j * k / (starts - 1))
                          for k in range(starts - 1)]
    # fixed ordering keeps ties deterministic
    best = min((run(s, 0.25 * spread, 1e-6 * spread) for s in seeds), key=lambda r: r.fun)
    best = run(complex(best.x[0], best.x[1]), 1e-4 * spread, 1e-13 * spread)
    u0, tau = complex(best.x[0], best.x[1]), float(best.fun)
    # the radius is exact to rounding; the center is only fixed to about
    # sqrt(eps) along directions where two supports trade off quadratically
    if not math.isfinite(tau):
        raise NonConvergenceError("enclosing-circle search failed", best=None)
    return u0, tau


def thurston_metric(domain: PlaneDomain, w: complex) -> ThurstonMetric:
    """Thurston density of a simply connected catalogued domain at w, with witness disk."""
    if not domain.simply_connected:
        raise UnsupportedError(f"Thurston metric needs a simply connected domain, not {domain.tag}")
    w = complex(w)
    if not domain.contains(w):
        raise DomainError(f"{w!r} is not in the {domain.tag}")
    arcs = [_ImageArc(a, w) for a in domain.boundary_arcs()]
    u0, tau = _minimize_enclosing(arcs)
    back = MobiusMap(w, 1, 1, 0)  # u -> w + 1/u
    witness = disk_map(back, RoundDisk.circle(u0, tau, inside=False))
    point = mobius_act(back, H3Point(u0, tau))
    return ThurstonMetric(2.0 * tau, witness, point, u0, tau)


def thurston_pullback(entry, z) -> float:
    """Pullback of the Thurston metric of ``entry``'s image by the map."""
    if not entry.univalent:
        raise UnsupportedError(f"{entry.name} is not univalent")
    j = entry.jet(z)
    w, df = complex(j.f), abs(complex(j.df))
    if isinstance(entry.image, RoundDisk):
        return round_disk_metric(entry.image, w) * df
    if isinstance(entry.image, PlaneDomain):
        return thurston_metric(entry.image, w).density * df
    raise UnsupportedError(f"{entry.name}: image domain not catalogued")


def slit_thurston_metric(domain: SlitPlane) -> ConformalMetric:
    """Closed-form Thurston metric of a slit plane.

    Left of the tip the largest round disk is a half-plane bounded by the
    slit's line; right of it, the half-plane through the tip perpendicular to
    the direction of the point.
    """
    tip = domain.tip

    def density(w):
        w = np.asarray(w, dtype=complex)
        with np.errstate(divide="ignore"):
            return np.where(w.real <= tip, 1.0 / np.abs(w.imag), 1.0 / np.abs(w - tip))

    def dlog(w):
        w = np.asarray(w, dtype=complex)
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.where(w.real <= tip, 0.5j / w.imag, -0.5 / (w - tip))

    return ConformalMetric(density, dlog, domain, "thurston slit-plane")


def pullback_metric(entry, metric: ConformalMetric) -> ConformalMetric:
    """The metric metric(f(z)) |f'(z)| on the source of the map ``entry``."""

    def density(z):
        j = entry.jet(z)
        return metric(j.f) * np.abs(j.df)

    def dlog(z):
        j = entry.jet(z)
        return metric.dlog(j.f) * j.df + 0.5 * j.d2f / j.df

    return ConformalMetric(density, dlog, entry.domain, f"pullback of {metric.name} by {entry.name}")
