"""Holomorphic jets, the Schwarzian derivative and a catalog of explicit maps.

Every catalog entry evaluates its value and first three derivatives in
closed form, so Schwarzians are exact up to rounding.  Jet evaluators accept
scalars or numpy arrays.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional

import numpy as np
from scipy import integrate, optimize

from .domains import (
    Annulus,
    ConformalMetric,
    PlaneDomain,
    Sector,
    SlitPlane,
    Strip,
    UnitDisk,
    UpperHalfPlane,
)
from .errors import CriticalPointError, DomainError, EvaluationError, NonConvergenceError, UnsupportedError
from .riemann_sphere import MobiusMap, RoundDisk, disk_map

__all__ = [
    "HolomorphicJet",
    "schwarzian_at",
    "compose_jets",
    "compose_schwarzian",
    "MapCatalogEntry",
    "catalog",
    "CATALOG_NAMES",
    "univalent_catalog",
    "QuadraticDifferential",
    "schwarzian_differential",
    "schwarzian_norm",
    "SupNorm",
    "sup_norm",
    "ball_sup_norm",
    "PolarRegion",
    "L2Norm",
    "l2_norm",
]


@dataclass(frozen=True)
class HolomorphicJet:
    """Value and first three derivatives of a holomorphic map at a point."""

    f: complex
    df: complex
    d2f: complex
    d3f: complex


def schwarzian_at(jet: HolomorphicJet):
    """f'''/f' - (3/2) (f''/f')^2."""
    if np.any(np.asarray(jet.df) == 0):
        raise CriticalPointError("f' vanishes; the Schwarzian is undefined")
    pre = jet.d2f / jet.df
    return jet.d3f / jet.df - 1.5 * pre * pre


def compose_jets(outer: HolomorphicJet, inner: HolomorphicJet) -> HolomorphicJet:
    """Jet of outer(inner(z)) from the jet of ``inner`` at z and of ``outer`` at inner(z)."""
    g1, g2, g3 = inner.df, inner.d2f, inner.d3f
    f1, f2, f3 = outer.df, outer.d2f, outer.d3f
    return HolomorphicJet(
        outer.f,
        f1 * g1,
        f2 * g1 * g1 + f1 * g2,
        f3 * g1**3 + 3.0 * f2 * g1 * g2 + f1 * g3,
    )


def compose_schwarzian(Sf_at_gz, g_jet: HolomorphicJet, Sg_at_z):
    """S(f o g)(z) = Sf(g(z)) g'(z)^2 + Sg(z)."""
    if np.any(np.asarray(g_jet.df) == 0):
        raise CriticalPointError("inner map has a critical point")
    return Sf_at_gz * g_jet.df**2 + Sg_at_z


# elementary jets -------------------------------------------------------------

def _mobius_jet(m: MobiusMap):
    def jet(z):
        z = np.asarray(z, dtype=complex)
        den = m.c * z + m.d
        if np.any(den == 0):
            raise DomainError("Mobius jet evaluated at its pole")
        return HolomorphicJet((m.a * z + m.b) / den, 1.0 / den**2, -2.0 * m.c / den**3, 6.0 * m.c**2 / den**4)

    return jet


def _power_jet(c: complex):
    # principal branch of z ** c
    def jet(z):
        z = np.asarray(z, dtype=complex)
        f = np.exp(c * np.log(z))
        return HolomorphicJet(f, c * f / z, c * (c - 1) * f / z**2, c * (c - 1) * (c - 2) * f / z**3)

    return jet


def _log_jet(z):
    z = np.asarray(z, dtype=complex)
    return HolomorphicJet(np.log(z), 1.0 / z, -1.0 / z**2, 2.0 / z**3)


def _koebe_jet(z):
    z = np.asarray(z, dtype=complex)
    u = 1.0 - z
    return HolomorphicJet(z / u**2, (1 + z) / u**3, (2 * z + 4) / u**4, (6 * z + 18) / u**5)


def _chain(outer: Callable, inner: Callable):
    def jet(z):
        g = inner(z)
        return compose_jets(outer(g.f), g)

    return jet


@dataclass(frozen=True)
class MapCatalogEntry:
    """A locally univalent map with exact jets.

    ``image`` is a :class:`PlaneDomain` or a :class:`RoundDisk` when the map is
    onto a catalogued domain, else ``None``.  ``image_differential`` (covering
    maps only) is the quadratic differential on the image whose pullback is the
    Schwarzian of the map.
    """

    name: str
    jet: Callable
    domain: PlaneDomain
    image: object = None
    schwarzian: Optional[Callable] = None
    univalent: bool = True
    params: dict = field(default_factory=dict)
    image_differential: Optional[Callable] = None

    def __call__(self, z):
        return self.jet(z).f

    def schwarzian_at(self, z):
        return schwarzian_at(self.jet(z))


def _identity():
    return MapCatalogEntry(
        "identity",
        lambda z: HolomorphicJet(np.asarray(z, dtype=complex), np.ones_like(z, dtype=complex),
                                 np.zeros_like(z, dtype=complex), np.zeros_like(z, dtype=complex)),
        UnitDisk(),
        UnitDisk(),
        lambda z: np.zeros_like(z, dtype=complex),
    )


def _mobius(a=2.0, b=1.0, c=1.0, d=3.0):
    m = MobiusMap(a, b, c, d)
    if abs(m.c) >= abs(m.d):
        raise DomainError("Mobius entry must not have its pole in the unit disk")
    return MapCatalogEntry(
        "mobius", _mobius_jet(m), UnitDisk(), disk_map(m, RoundDisk.unit()),
        lambda z: np.zeros_like(z, dtype=complex), params=dict(a=a, b=b, c=c, d=d),
    )


def _cayley():
    return MapCatalogEntry("cayley", _mobius_jet(MobiusMap.cayley()), UpperHalfPlane(), UnitDisk(),
                           lambda z: np.zeros_like(z, dtype=complex))


def _cayley_inverse():
    return MapCatalogEntry("cayley_inverse", _mobius_jet(MobiusMap.cayley().inverse()), UnitDisk(),
                           UpperHalfPlane(), lambda z: np.zeros_like(z, dtype=complex))


def _koebe():
    return MapCatalogEntry("koebe", _koebe_jet, UnitDisk(), SlitPlane(-0.25),
                           lambda z: -6.0 / (1.0 - np.asarray(z) ** 2) ** 2)


def _power(c=1.5):
    c = complex(c)
    real_c = c.imag == 0
    return MapCatalogEntry(
        "power", _power_jet(c), UpperHalfPlane(), None,
        lambda z: (1.0 - c * c) / (2.0 * np.asarray(z) ** 2),
        univalent=bool(real_c and 0 < c.real <= 2), params=dict(c=c),
    )


def _right_half_plane_jet():
    # (1 + z) / (1 - z), disk onto the right half-plane
    return _mobius_jet(MobiusMap(1, 1, -1, 1))


def _sector(c=2.0):
    if not 0 < c <= 2:
        raise DomainError("sector maps are univalent only for 0 < c <= 2")
    return MapCatalogEntry(
        "sector", _chain(_power_jet(c), _right_half_plane_jet()), UnitDisk(), Sector(c * math.pi / 2),
        lambda z: 2.0 * (1.0 - c * c) / (1.0 - np.asarray(z) ** 2) ** 2, params=dict(c=c),
    )


def _strip():
    return MapCatalogEntry("strip", _chain(_log_jet, _right_half_plane_jet()), UnitDisk(), Strip(),
                           lambda z: 2.0 / (1.0 - np.asarray(z) ** 2) ** 2)


def _half_plane_log():
    return MapCatalogEntry("half_plane_log", _log_jet, UpperHalfPlane(), None,
                           lambda z: 0.5 / np.asarray(z) ** 2)


def _annulus_cover(R=2.0):
    ann = Annulus(R)
    alpha = ann.alpha
    c = -1j * alpha
    to_half_plane = _mobius_jet(MobiusMap.cayley().inverse())
    wrap = _power_jet(c)

    def jet(z):
        j = compose_jets(wrap(to_half_plane(z).f), to_half_plane(z))
        return HolomorphicJet(j.f / R, j.df / R, j.d2f / R, j.d3f / R)

    cayley_inv = MobiusMap.cayley().inverse()

    def schwarzian(z):
        # cocycle through the Mobius first factor: S(w^c)(w) * w'(z)^2
        z = np.asarray(z, dtype=complex)
        w = (cayley_inv.a * z + cayley_inv.b) / (cayley_inv.c * z + cayley_inv.d)
        dw = 1.0 / (cayley_inv.c * z + cayley_inv.d) ** 2
        return (1.0 - c * c) / (2.0 * w * w) * dw * dw

    def image_differential(z):
        return -(1.0 + alpha**2) / (2.0 * alpha**2 * np.asarray(z) ** 2)

    return MapCatalogEntry("annulus_cover", jet, UnitDisk(), ann, schwarzian, univalent=False,
                           params=dict(R=R), image_differential=image_differential)


_FACTORIES = {
    "identity": _identity,
    "mobius": _mobius,
    "cayley": _cayley,
    "cayley_inverse": _cayley_inverse,
    "koebe": _koebe,
    "power": _power,
    "sector": _sector,
    "strip": _strip,
    "half_plane_log": _half_plane_log,
    "annulus_cover": _annulus_cover,
}

CATALOG_NAMES = tuple(_FACTORIES)


def catalog(name: str, **params) -> MapCatalogEntry:
    """Look up a catalog entry by name, e.g. ``catalog("sector", c=1.5)``."""
    try:
        factory = _FACTORIES[name]
    except KeyError:
        raise UnsupportedError(f"unknown map {name!r}; known: {', '.join(CATALOG_NAMES)}") from None
    return factory(**params)


def univalent_catalog() -> list:
    """Default-parameter univalent entries, plus a few sector and power openings."""
    entries = [catalog(n) for n in CATALOG_NAMES if n != "annulus_cover"]
    entries += [catalog("sector", c=c) for c in (0.5, 1.0, 1.5)]
    entries += [catalog("power", c=c) for c in (0.5, 2.0)]
    return [e for e in entries if e.univalent]


# quadratic differentials ----------------------------------------------------

@dataclass(frozen=True)
class QuadraticDifferential:
    """phi(z) dz^2 on ``domain`` measured against the metric ``metric``."""

    phi: Callable
    metric: ConformalMetric
    domain: PlaneDomain

    def norm(self, z):
        return np.abs(self.phi(z)) / self.metric(z) ** 2


def schwarzian_differential(entry: MapCatalogEntry) -> QuadraticDifferential:
    """Sf on the source domain of ``entry`` against its hyperbolic metric."""
    return QuadraticDifferential(entry.schwarzian_at, ConformalMetric.hyperbolic(entry.domain), entry.domain)


def image_differential(entry: MapCatalogEntry) -> QuadraticDifferential:
    """The pushed-down Schwarzian of a covering map, on its image domain."""
    if entry.image_differential is None:
        raise UnsupportedError(f"{entry.name} has no image differential")
    return QuadraticDifferential(entry.image_differential, ConformalMetric.hyperbolic(entry.image), entry.image)


def schwarzian_norm(q: QuadraticDifferential, z) -> float:
    """|phi(z)| / rho(z)^2."""
    if not q.domain.contains(z):
        raise DomainError(f"{z!r} is outside the domain")
    return float(q.norm(z))


class SupNorm(NamedTuple):
    value: float
    point: complex
    grid_value: float
    samples: int


def sup_norm(q: QuadraticDifferential, levels: int = 24, angles: int = 48, refine: bool = True) -> SupNorm:
    """Estimate sup |phi| / rho^2 by a grid scan plus local refinement.

    The grid maximum is a certified lower bound; refinement (Nelder-Mead from
    the best few grid points) can only raise it.
    """
    pts = np.asarray(q.domain.sample_points(levels, angles), dtype=complex)
    with np.errstate(all="ignore"):
        vals = np.asarray(q.norm(pts), dtype=float)
    if not np.all(np.isfinite(vals)):
        raise EvaluationError("non-finite norm samples")
    i = int(np.argmax(vals))
    best_val, best_pt = float(vals[i]), complex(pts[i])
    grid_val = best_val
    if refine:
        dom = q.domain

        def neg(p):
            z = complex(p[0], p[1])
            if not dom.contains(z):
                return 0.0
            v = float(q.norm(z))
            return -v if math.isfinite(v) else 0.0

        for j in np.argsort(vals)[::-1][:4]:
            z0 = complex(pts[j])
            step = 0.25 * dom.distance_to_boundary(z0)
            simplex = np.array([[z0.real, z0.imag], [z0.real + step, z0.imag], [z0.real, z0.imag + step]])
            res = optimize.minimize(neg, [z0.real, z0.imag], method="Nelder-Mead",
                                    options=dict(initial_simplex=simplex, xatol=1e-10, fatol=1e-14, maxiter=2000))
            if -res.fun > best_val:
                best_val, best_pt = -float(res.fun), complex(res.x[0], res.x[1])
    return SupNorm(best_val, best_pt, grid_val, len(pts))


def ball_sup_norm(q: QuadraticDifferential, center: complex, radius: float,
                  levels: int = 16, angles: int = 48) -> float:
    """Grid maximum of the norm over the hyperbolic ball B(center, radius) of the unit disk."""
    if not isinstance(q.domain, UnitDisk):
        raise UnsupportedError("ball sup norm is only set up on the unit disk")
    center = complex(center)
    if not abs(center) < 1 or not radius > 0:
        raise DomainError("need a center in the disk and a positive radius")
    w = np.outer(np.linspace(0.0, math.tanh(radius / 2.0), levels + 1),
                 np.exp(2j * np.pi * np.arange(angles) / angles)).ravel()
    # the disk automorphism taking 0 to the center carries B(0, r) onto B(center, r)
    z = (w + center) / (1.0 + np.conj(center) * w)
    return float(np.max(q.norm(z)))


@dataclass(frozen=True)
class PolarRegion:
    """{center + r e^{i theta} : r_min <= r <= r_max, theta_min <= theta <= theta_max}."""

    center: complex
    r_min: float
    r_max: float
    theta_min: float = 0.0
    theta_max: float = 2 * math.pi

    def area(self) -> float:
        return 0.5 * (self.theta_max - self.theta_min) * (self.r_max**2 - self.r_min**2)


class L2Norm(NamedTuple):
    value: float
    error: float


def _integrate_polar(func, region: PolarRegion, epsabs: float, epsrel: float):
    """Integral of func(z) dA over a polar region with error estimate."""
    c = region.center

    def inner(r):
        val, err = integrate.quad(
            lambda th: func(c + r * np.exp(1j * th)), region.theta_min, region.theta_max,
            epsabs=epsabs, epsrel=epsrel, limit=200,
        )
        inner.err = max(inner.err, err)
        return val * r

    inner.err = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            val, err = integrate.quad(inner, region.r_min, region.r_max, epsabs=epsabs, epsrel=epsrel, limit=200)
        except integrate.IntegrationWarning as exc:
            raise NonConvergenceError(f"quadrature did not converge: {exc}") from None
    if not math.isfinite(val):
        raise NonConvergenceError("integral is not finite")
    return val, err + inner.err * (region.r_max**2 - region.r_min**2) / 2


def l2_norm(q: QuadraticDifferential, region: PolarRegion, epsabs: float = 1e-11, epsrel: float = 1e-11) -> L2Norm:
    """(integral of (|phi|/rho^2)^2 rho^2 dA)^(1/2) over ``region``."""

    def integrand(z):
        return float(np.abs(q.phi(z)) ** 2 / q.metric(z) ** 2)

    sq, err = _integrate_polar(integrand, region, epsabs, epsrel)
    value = math.sqrt(max(sq, 0.0))
    return L2Norm(value, err / (2 * value) if value > 0 else math.sqrt(err))
