"""W-volume of rotationally symmetric convex bodies and the metric at infinity.

Bodies are symmetric about the vertical geodesic over 0 in the upper
half-space, so everything reduces to a profile curve in the half-plane
``{(x, t) : x >= 0, t > 0}`` traversed from the bottom axis point to the top
one.  The profile is a chain of pieces (circle arcs and geodesic segments);
each piece is sampled by a parameter in [0, 1] returning the Euclidean point,
the Euclidean unit outward normal, the meridian curvature and the hyperbolic
speed.  A t-neighborhood is obtained by flowing every profile point along its
normal, which moves arcs of radius r to radius r + t and turns geodesic
segments into equidistant curves.

With sinh(rho) = x / t the distance to the axis,

    dA = 2 pi sinh(rho) ds,      kappa_parallel = coth(rho) <grad rho, n>,
    vol = pi * integral of x^2 t^-3 dt     (Green's theorem).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, NamedTuple

import numpy as np
from scipy import integrate, optimize

from .domains import ConformalMetric
from .errors import DomainError, GeometryError, NonConvergenceError
from .halfspace import H3Point, UnitTangent, flow_arrays, geodesic_flow, visual_metric
from .schwarzian import PolarRegion, QuadraticDifferential, _integrate_polar

__all__ = [
    "ConvexRevolutionBody",
    "ProfileSample",
    "BodyIntegrals",
    "MeanCurvatureCheck",
    "body_integrals",
    "w_volume",
    "w_volume_alternate",
    "mean_curvature_identity_residual",
    "contact_point",
    "metric_at_infinity",
    "metric_at_infinity_area",
    "GradientPair",
    "wp_gradient",
    "wp_pairing",
    "teichmuller_norm",
]

EULER_CHARACTERISTIC = 2  # boundary spheres


class ProfileSample(NamedTuple):
    x: np.ndarray
    t: np.ndarray
    nx: np.ndarray
    nt: np.ndarray
    kappa_meridian: np.ndarray
    speed: np.ndarray  # hyperbolic arc length per unit parameter

    @property
    def kappa_parallel(self):
        with np.errstate(divide="ignore", invalid="ignore"):
            return (self.t * self.nx - self.x * self.nt) / self.x


def _arc_piece(height: float, radius: float, theta0: float, theta1: float) -> Callable:
    # hyperbolic circle about (0, height) is the Euclidean circle about (0, height cosh r)
    ce, R = height * math.cosh(radius), height * math.sinh(radius)
    kappa = 1.0 / math.tanh(radius)
    span = theta1 - theta0

    def sample(lam):
        th = theta0 + span * np.asarray(lam, dtype=float)
        s, c = np.sin(th), np.cos(th)
        t = ce - R * c
        return ProfileSample(R * s, t, s, -c, np.full_like(th, kappa), R * span / t)

    return sample


def _geodesic_piece(p1: complex, p2: complex, outward: complex) -> Callable:
    """Geodesic segment from p1 to p2 (points x + i t), normal on the side of ``outward``."""
    if abs(p1.real - p2.real) < 1e-13 * max(1.0, abs(p1), abs(p2)):
        x0, u0, u1 = p1.real, math.log(p1.imag), math.log(p2.imag)
        sign = 1.0 if outward.real > 0 else -1.0

        def vertical(lam):
            u = u0 + (u1 - u0) * np.asarray(lam, dtype=float)
            one = np.ones_like(u)
            return ProfileSample(x0 * one, np.exp(u), sign * one, 0 * one, 0 * one, abs(u1 - u0) * one)

        return vertical
    c = (abs(p2) ** 2 - abs(p1) ** 2) / (2.0 * (p2.real - p1.real))
    R = abs(p1 - c)
    th0, th1 = math.atan2(p1.imag, p1.real - c), math.atan2(p2.imag, p2.real - c)
    radial = (p1 - c) / R
    sign = 1.0 if (radial.conjugate() * outward).real > 0 else -1.0
    span = th1 - th0

    def sample(lam):
        th = th0 + span * np.asarray(lam, dtype=float)
        s, co = np.sin(th), np.cos(th)
        return ProfileSample(c + R * co, R * s, sign * co, sign * s, 0 * th, abs(span) / s)

    return sample


def _hyperboloid(height: float):
    u = math.log(height)
    return np.array([math.cosh(u), math.sinh(u), 0.0])


def _tangent_geodesic(h1, r1, h2, r2):
    """Tangency points (x + i t) of the outer common tangent geodesic of two axis circles."""
    C1, C2 = _hyperboloid(h1), _hyperboloid(h2)
    # unit spacelike n with <C_i, n> = sinh r_i in the (-, +, +) form
    M = np.array([[-C1[0], C1[1]], [-C2[0], C2[1]]])
    n0, n1 = np.linalg.solve(M, [math.sinh(r1), math.sinh(r2)])
    rest = 1.0 + n0 * n0 - n1 * n1
    if not rest > 0:
        raise GeometryError("one ball contains the other; the hull is a ball")
    n = np.array([n0, n1, -math.sqrt(rest)])
    pts = []
    for C, r in ((C1, r1), (C2, r2)):
        T = C * math.cosh(r) - (n + math.sinh(r) * C) * math.tanh(r)
        t = 1.0 / (T[0] - T[1])
        pts.append(complex(T[2] * t, t))
    return pts


@dataclass(frozen=True)
class ConvexRevolutionBody:
    """Ball, spindle (convex hull of two axis balls) or a t-neighborhood of either.

    ``balls`` holds (center height, radius) pairs on the vertical axis over 0,
    listed bottom to top; ``offset`` is the neighborhood distance.
    """

    kind: str
    balls: tuple
    offset: float = 0.0

    @classmethod
    def ball(cls, radius: float, height: float = 1.0) -> "ConvexRevolutionBody":
        if not radius >= 0 or not height > 0:
            raise DomainError("ball needs radius >= 0 and a positive center height")
        return cls("ball", ((float(height), float(radius)),))

    @classmethod
    def spindle(cls, h1: float, r1: float, h2: float, r2: float) -> "ConvexRevolutionBody":
        if not (r1 > 0 and r2 > 0 and h1 > 0 and h2 > 0):
            raise DomainError("spindle needs positive radii and heights")
        if h1 > h2:
            h1, r1, h2, r2 = h2, r2, h1, r1
        if abs(math.log(h2 / h1)) <= abs(r1 - r2):
            raise GeometryError("one ball contains the other; the hull is a ball")
        return cls("spindle", ((float(h1), float(r1)), (float(h2), float(r2))))

    def neighborhood(self, distance: float) -> "ConvexRevolutionBody":
        if not distance >= 0:
            raise DomainError("neighborhood distance must be nonnegative")
        return ConvexRevolutionBody(self.kind, self.balls, self.offset + distance)

    @property
    def is_ball(self) -> bool:
        return self.kind == "ball"

    @property
    def radius(self) -> float:
        """Radius of a ball body including the offset."""
        if not self.is_ball:
            raise GeometryError("only balls have a radius")
        return self.balls[0][1] + self.offset

    @cached_property
    def _base_pieces(self) -> tuple:
        if self.is_ball:
            h, r = self.balls[0]
            if r == 0:
                raise GeometryError("a point has no profile; use the closed forms")
            return (_arc_piece(h, r, 0.0, math.pi),)
        (h1, r1), (h2, r2) = self.balls
        T1, T2 = _tangent_geodesic(h1, r1, h2, r2)
        c1, c2 = h1 * math.cosh(r1), h2 * math.cosh(r2)
        a1 = math.atan2(T1.real, c1 - T1.imag)
        a2 = math.atan2(T2.real, c2 - T2.imag)
        outward = complex(T1.real, T1.imag - c1)
        return (_arc_piece(h1, r1, 0.0, a1), _geodesic_piece(T1, T2, outward), _arc_piece(h2, r2, a2, math.pi))

    def pieces(self) -> tuple:
        """Profile samplers lam -> ProfileSample, flowed by the offset."""
        s = self.offset
        if s == 0:
            return self._base_pieces
        ch, sh = math.cosh(s), math.sinh(s)

        def flowed(base):
            def sample(lam):
                p = base(lam)
                x, t, h, b = flow_arrays(p.x + 0j, p.t, p.nx + 0j, p.nt, s)
                k = p.kappa_meridian
                return ProfileSample(np.real(x), t, np.real(h), b, (k * ch + sh) / (k * sh + ch),
                                     p.speed * (ch + k * sh))
            return sample

        return tuple(flowed(b) for b in self._base_pieces)

    def sample_profile(self, n: int = 50):
        """(arc length, ProfileSample) at n parameter values per piece."""
        lam = np.linspace(0.0, 1.0, n)
        out, start = [], 0.0
        for piece in self.pieces():
            p = piece(lam)
            sig = start + integrate.cumulative_trapezoid(p.speed, lam, initial=0.0)
            out.append((sig, p))
            start = sig[-1]
        return out


class BodyIntegrals(NamedTuple):
    volume: float
    area: float
    mean_curvature: float  # integral of H dA
    retraction_area: float  # integral of det(I + B) dA
    error: float


def _integrands(p: ProfileSample):
    sinh_rho = p.x / p.t
    k2_term = p.nx - p.x * p.nt / p.t  # kappa_parallel * sinh(rho)
    ds = p.speed
    return np.array([
        math.pi * p.x**2 * p.nx / p.t**2 * ds,
        2 * math.pi * sinh_rho * ds,
        math.pi * (p.kappa_meridian * sinh_rho + k2_term) * ds,
        2 * math.pi * (1 + p.kappa_meridian) * (sinh_rho + k2_term) * ds,
    ])


def _ball_integrals(body):
    r = body.radius
    return BodyIntegrals(
        math.pi * (math.sinh(2 * r) - 2 * r), 4 * math.pi * math.sinh(r) ** 2,
        2 * math.pi * math.sinh(2 * r), 4 * math.pi * math.exp(2 * r), 0.0,
    )


def body_integrals(body: ConvexRevolutionBody, closed_form: bool = True, tol: float = 1e-12) -> BodyIntegrals:
    """Volume, area, integrated mean curvature and retraction-pullback area.

    Balls use closed forms unless ``closed_form`` is False; otherwise adaptive
    quadrature over each profile piece, with the summed error estimate.
    """
    if body.is_ball and (closed_form or body.radius == 0):
        return _ball_integrals(body)
    total, err = np.zeros(4), 0.0
    for piece in body.pieces():
        val, e = integrate.quad_vec(lambda lam: _integrands(piece(np.array([lam]))).ravel(), 0.0, 1.0,
                                    epsabs=tol, epsrel=tol, limit=400)
        if not np.all(np.isfinite(val)):
            raise NonConvergenceError("profile quadrature is not finite")
        total += val
        err += float(e)
    if err > 1e-7:
        raise NonConvergenceError(f"profile quadrature error {err:.2e} too large")
    return BodyIntegrals(*map(float, total), err)


def _forward_end(p: ProfileSample) -> float:
    # boundary endpoint of the outward normal geodesic: x + nx t / (1 - nt)
    nx, nt = float(p.nx[0]), float(p.nt[0])
    one_minus = nx * nx / (1 + nt) if nt > 0 else 1 - nt
    if one_minus == 0:
        return math.inf
    return float(p.x[0]) + nx * float(p.t[0]) / one_minus


def _toward(center: H3Point, z: complex, r: float) -> H3Point:
    # point at distance r from center along the geodesic ray ending at z
    d = z - center.xi
    t = center.t
    vec = (2 * t * d.real, 2 * t * d.imag, abs(d) ** 2 - t * t)
    return geodesic_flow(UnitTangent(center, vec), r).base


def contact_point(body: ConvexRevolutionBody, z, closed_form: bool = True) -> H3Point:
    """Point of the body whose outward normal geodesic ends at z (its retraction).

    Off the closed form, the profile parameter is found by a bracketed root
    search on the monotone map from profile points to normal endpoints.
    """
    z = complex(z)
    q = abs(z)
    if body.is_ball and (closed_form or body.radius == 0):
        return _toward(H3Point(0j, body.balls[0][0]), z, body.radius)
    pieces = body.pieces()
    if q == 0:
        return H3Point(0j, float(pieces[0](np.array([0.0])).t[0]))

    def g(lam, piece):
        return math.atan(_forward_end(piece(np.array([lam])))) - math.atan(q)

    for piece in pieces:
        if g(1.0, piece) < 0:
            continue
        lam = 0.0 if g(0.0, piece) >= 0 else optimize.brentq(
            g, 0.0, 1.0, args=(piece,), xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=200)
        p = piece(np.array([lam]))
        return H3Point(float(p.x[0]) * z / q, float(p.t[0]))
    raise NonConvergenceError("no profile point has its normal ending at z")


def metric_at_infinity(body: ConvexRevolutionBody, z, closed_form: bool = True) -> float:
    """Visual density at z of the body's contact point for z."""
    return visual_metric(contact_point(body, z, closed_form), complex(z))


def metric_at_infinity_area(body: ConvexRevolutionBody, closed_form: bool = False, tol: float = 1e-11):
    """(area of the metric at infinity, error) by radial quadrature in u = log|z|."""

    def integrand(u):
        q = math.exp(u)
        return 2 * math.pi * metric_at_infinity(body, q, closed_form) ** 2 * q * q

    # breakpoints where the profile switches piece
    kinks = [math.log(b[0]) for b in body.balls]
    if not body.is_ball:
        for piece in body.pieces()[1:]:
            e = _forward_end(piece(np.array([0.0])))
            if 0 < e < math.inf:
                kinks.append(math.log(e))
    lo, hi = min(kinks) - 40.0, max(kinks) + 40.0
    val, err = integrate.quad(integrand, lo, hi, epsabs=tol, epsrel=tol, limit=400, points=sorted(kinks))
    return val, err


def w_volume(body: ConvexRevolutionBody, closed_form: bool = True) -> float:
    """vol(N) - (1/2) integral of H over the boundary."""
    I = body_integrals(body, closed_form)
    return I.volume - 0.5 * I.mean_curvature


def _metric_area(body, closed_form):
    if body.is_ball and (closed_form or body.radius == 0):
        return 4 * math.pi * math.exp(2 * body.radius)
    return metric_at_infinity_area(body, closed_form)[0]


def w_volume_alternate(body: ConvexRevolutionBody, closed_form: bool = True) -> float:
    """vol - area(rho_N)/4 + area/2 + pi chi/2, with area(rho_N) from the metric at infinity."""
    I = body_integrals(body, closed_form)
    return I.volume - 0.25 * _metric_area(body, closed_form) + 0.5 * I.area + 0.5 * math.pi * EULER_CHARACTERISTIC


class MeanCurvatureCheck(NamedTuple):
    residual: float
    pullback_residual: float
    mean_curvature: float
    metric_area: float
    area: float


def mean_curvature_identity_residual(body: ConvexRevolutionBody, closed_form: bool = True) -> MeanCurvatureCheck:
    """|int H - (area(rho_N)/2 - area - pi chi)| and |int det(I + B) - area(rho_N)|.

    The metric area comes from the metric at infinity and the other terms from
    the profile, so the two sides are computed independently.
    """
    I = body_integrals(body, closed_form)
    m = _metric_area(body, closed_form)
    rhs = 0.5 * m - I.area - math.pi * EULER_CHARACTERISTIC
    return MeanCurvatureCheck(abs(I.mean_curvature - rhs), abs(I.retraction_area - m), I.mean_curvature, m, I.area)


@dataclass(frozen=True)
class GradientPair:
    phi: QuadraticDifferential
    region: PolarRegion

    @property
    def metric(self) -> ConformalMetric:
        return self.phi.metric


def wp_gradient(pair: GradientPair, z):
    """Beltrami differential -conj(phi) / rho^2."""
    return -np.conj(pair.phi.phi(z)) / pair.metric(z) ** 2


def wp_pairing(pair: GradientPair, mu: Callable, epsabs: float = 1e-11, epsrel: float = 1e-11):
    """(Re integral of mu phi dA over the region, error)."""
    return _integrate_polar(lambda z: float(np.real(mu(z) * pair.phi.phi(z))), pair.region, epsabs, epsrel)


def teichmuller_norm(pair: GradientPair, samples) -> float:
    """Largest |gradient| over the samples; equals the sup norm of phi there."""
    return float(np.max(np.abs(wp_gradient(pair, np.asarray(samples, dtype=complex)))))
