"""Epstein surfaces as envelopes of horosphere families.

Given a locally univalent map f and a conformal metric rho, each z determines
the horosphere based at f(z) whose visual density there is
sigma(z) = rho(z) / |f'(z)|.  The envelope of this family has the closed form

    L = conj(d/dz log rho) - conj(f''/f') / 2
    A = 2 L / (sigma conj(f'))
    t = 2 / (sigma (1 + |A|^2)),     xi = f + t A,

and the unit normal pointing into the horosphere is
sigma * (f - xi, 1/sigma - t) in Euclidean components.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .domains import ConformalMetric, UnitDisk
from .errors import DomainError, EnvelopeDegenerateError, UnsupportedError
from .halfspace import (
    H3Point,
    Horosphere,
    UnitTangent,
    geodesic_flow,
    horosphere_from,
    hyperboloid_jacobian,
    hyperboloid_point,
    minkowski_dot,
)
from .schwarzian import MapCatalogEntry, schwarzian_at

__all__ = [
    "EpsteinInput",
    "EpsteinFrame",
    "NonImmersedError",
    "epstein_envelope",
    "epstein_frame",
    "epstein_flow",
    "flowed_curvature",
    "principal_curvatures_analytic",
    "principal_curvatures_numeric",
    "convexity_threshold",
    "convexity_threshold_as_stated",
    "convexity_time",
    "convexity_time_from_norm",
]


class NonImmersedError(EnvelopeDegenerateError):
    """The Epstein surface is not immersed at the point (a curvature is infinite)."""


@dataclass(frozen=True)
class EpsteinInput:
    f: MapCatalogEntry
    rho: ConformalMetric

    @classmethod
    def hyperbolic(cls, f: MapCatalogEntry) -> "EpsteinInput":
        return cls(f, ConformalMetric.hyperbolic(UnitDisk()))

    @property
    def is_disk_hyperbolic(self) -> bool:
        return self.rho.name == "hyperbolic disk"


@dataclass(frozen=True)
class EpsteinFrame:
    point: H3Point
    normal: UnitTangent
    horosphere: Horosphere


def epstein_envelope(inp: EpsteinInput, z, s: float = 0.0):
    """Vectorized envelope: returns (xi, t, normal) with normal of shape (..., 3)."""
    z = np.asarray(z, dtype=complex)
    jet = inp.f.jet(z)
    f1 = jet.df
    if np.any(f1 == 0):
        raise EnvelopeDegenerateError("f' vanishes")
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        sigma = math.exp(s) * inp.rho(z) / np.abs(f1)
        L = np.conj(inp.rho.dlog(z)) - 0.5 * np.conj(jet.d2f / f1)
        A = 2.0 * L / (sigma * np.conj(f1))
        t = 2.0 / (sigma * (1.0 + np.abs(A) ** 2))
        xi = jet.f + t * A
    if not (np.all(np.isfinite(t)) and np.all(t > 0) and np.all(np.isfinite(xi))):
        raise EnvelopeDegenerateError("envelope height is not a positive finite number")
    gap = jet.f - xi
    normal = np.stack([sigma * gap.real, sigma * gap.imag, 1.0 - sigma * t], axis=-1)
    return xi, t, normal


def epstein_frame(inp: EpsteinInput, z, s: float = 0.0) -> EpsteinFrame:
    """Envelope point, inward normal and horosphere for the metric exp(s) * rho."""
    z = complex(z)
    if not inp.f.domain.contains(z):
        raise DomainError(f"{z!r} is outside the map's domain")
    xi, t, n = epstein_envelope(inp, z, s)
    sigma = math.exp(s) * float(inp.rho(z)) / abs(complex(inp.f.jet(z).df))
    x = H3Point(complex(xi), float(t))
    return EpsteinFrame(x, UnitTangent(x, n), horosphere_from(complex(inp.f(z)), sigma))


def epstein_flow(inp: EpsteinInput, z, s: float) -> EpsteinFrame:
    """Geodesic flow of the Epstein frame by s along its normal."""
    frame = epstein_frame(inp, z)
    v = geodesic_flow(frame.normal, s)
    h = frame.horosphere
    return EpsteinFrame(v.base, v, Horosphere(h.base, h.euclidean_radius * math.exp(-s)))


def flowed_curvature(kappa: float, s: float) -> float:
    """Principal curvature after flowing a distance s along the normal."""
    return (kappa * math.cosh(s) + math.sinh(s)) / (kappa * math.sinh(s) + math.cosh(s))


def _disk_norm(inp: EpsteinInput, z) -> float:
    if not inp.is_disk_hyperbolic:
        raise UnsupportedError("analytic curvatures need the hyperbolic metric of the disk")
    S = schwarzian_at(inp.f.jet(complex(z)))
    return abs(S) * (1.0 - abs(z) ** 2) ** 2 / 4.0


def principal_curvatures_analytic(inp: EpsteinInput, z, s: float = 0.0):
    """(-n/(n+1), -n/(n-1)) with n = ||Sf(z)||, then flowed by s."""
    n = _disk_norm(inp, z)
    if abs(n - 1.0) < 1e-12:
        raise NonImmersedError(f"||Sf|| = 1 at {z!r}; one principal curvature is infinite")
    k = (float(-n / (n + 1.0)), float(-n / (n - 1.0)))
    if s:
        k = tuple(flowed_curvature(v, s) for v in k)
    return k


def _hyperboloid_frame(inp, z, s):
    xi, t, n = epstein_envelope(inp, z, s)
    x = H3Point(complex(xi), float(t))
    return hyperboloid_point(x), hyperboloid_jacobian(x) @ (x.t * n)


def _shape_eigenvalues(inp, z, h, s):
    dom = inp.f.domain
    for p in (z + h, z - h, z + 1j * h, z - 1j * h):
        if not dom.contains(p):
            raise DomainError("finite-difference stencil leaves the domain")
    Xp, Np = _hyperboloid_frame(inp, z + h, s)
    Xm, Nm = _hyperboloid_frame(inp, z - h, s)
    Yp, Mp = _hyperboloid_frame(inp, z + 1j * h, s)
    Ym, Mm = _hyperboloid_frame(inp, z - 1j * h, s)
    Xu, Xv = (Xp - Xm) / (2 * h), (Yp - Ym) / (2 * h)
    Nu, Nv = (Np - Nm) / (2 * h), (Mp - Mm) / (2 * h)
    first = np.array([[minkowski_dot(Xu, Xu), minkowski_dot(Xu, Xv)],
                      [minkowski_dot(Xv, Xu), minkowski_dot(Xv, Xv)]])
    second = np.array([[minkowski_dot(Nu, Xu), minkowski_dot(Nu, Xv)],
                       [minkowski_dot(Nv, Xu), minkowski_dot(Nv, Xv)]])
    ev = np.linalg.eigvals(np.linalg.solve(first, second))
    return np.sort(ev.real)


def principal_curvatures_numeric(inp: EpsteinInput, z, h: float = 1e-3, s: float = 0.0,
                                 extrapolate: bool = False):
    """Shape-operator eigenvalues from central differences on the hyperboloid.

    ``h`` is the Euclidean step in the parameter plane.  The error is O(h^2);
    ``extrapolate`` applies one Richardson step using h and h/2.
    """
    z = complex(z)
    k = _shape_eigenvalues(inp, z, h, s)
    if extrapolate:
        k = (4.0 * _shape_eigenvalues(inp, z, h / 2, s) - k) / 3.0
    return tuple(float(v) for v in k)


def convexity_threshold(kappa: float) -> float:
    """Smallest flow time after which the flowed curvature stays positive."""
    if kappa == -1.0:
        return math.inf
    if kappa == 1.0:
        return 0.0
    return max(0.0, 0.5 * math.log(abs(1.0 - kappa) / abs(1.0 + kappa)))


def convexity_threshold_as_stated(kappa: float) -> float:
    """log sqrt(|1 + kappa| / |1 - kappa|), the threshold with the ratio inverted.

    Kept for comparison; :func:`convexity_threshold` is the one the flow law
    supports.
    """
    return 0.5 * math.log(abs(1.0 + kappa) / abs(1.0 - kappa))


def convexity_time(inp: EpsteinInput, z) -> float:
    """Max over both principal curvatures of :func:`convexity_threshold`."""
    n = _disk_norm(inp, z)
    if n == 0:
        return 0.0
    return max(convexity_threshold(k) for k in principal_curvatures_analytic(inp, z))


def convexity_time_from_norm(norm: float) -> float:
    """The same threshold written through the Schwarzian norm: log sqrt(1 + 2 n)."""
    return 0.5 * math.log1p(2.0 * norm)
