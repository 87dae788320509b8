import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import minimize, minimize_scalar

from epstein_kit.errors import DomainError
from epstein_kit.halfspace import (
    GeodesicPlane,
    H3Point,
    UnitTangent,
    geodesic_endpoints,
    geodesic_flow,
    horosphere_from,
    hyperbolic_distance,
    hyperboloid_point,
    minkowski_dot,
    mobius_act,
    project_to_geodesic,
    project_to_plane,
    visual_metric,
)
from epstein_kit.riemann_sphere import INF, MobiusMap, RoundDisk

from conftest import complexes, heights, mobius_maps


def visual_metric_by_construction(x, z):
    """Build the geodesic x -> z, the plane through x orthogonal to it, and
    evaluate the disk density of that plane's disk at z."""
    delta = abs(x.xi - z)
    if delta < 1e-12:
        # vertical geodesic; the orthogonal plane is the hemisphere of radius t
        r = x.t
        return 2 * r / r**2
    if abs(delta - x.t) < 1e-12:
        # orthogonal plane is vertical; the disk is a half-plane at distance delta
        return 1 / delta
    # other endpoint of the geodesic: 2*lam along the line from z through xi
    lam = (delta**2 + x.t**2) / (2 * delta)
    # boundary circle of the orthogonal plane: centered mu along the same
    # line, with z and the far endpoint inverse to each other
    mu = delta * lam / (delta - lam)
    radius_sq = mu * mu - 2 * lam * mu
    r = math.sqrt(radius_sq)
    return 2 * r / abs(radius_sq - mu**2)


def test_visual_metric_examples():
    assert visual_metric(H3Point(0, 1), 0) == pytest.approx(2.0)
    assert visual_metric(H3Point(0, 2), 0) == pytest.approx(1.0)
    assert visual_metric(H3Point(0, 1), 1) == pytest.approx(1.0)
    for x, z in [(H3Point(0, 1), 0), (H3Point(0, 2), 0), (H3Point(0, 1), 1)]:
        assert visual_metric_by_construction(x, z) == pytest.approx(visual_metric(x, z))


def test_visual_metric_matches_construction(rng):
    checked = 0
    for _ in range(1000):
        x = H3Point(complex(*rng.normal(size=2)), rng.uniform(0.1, 3))
        z = complex(*rng.normal(size=2))
        if abs(abs(x.xi - z) - x.t) < 1e-6:
            continue  # orthogonal plane is vertical
        assert visual_metric_by_construction(x, z) == pytest.approx(visual_metric(x, z), rel=1e-9)
        checked += 1
    assert checked > 990


def test_visual_metric_at_infinity_is_chart_value():
    x = H3Point(0.3 + 0.2j, 0.7)
    inv = MobiusMap.inversion()
    assert visual_metric(x, INF) == pytest.approx(visual_metric(mobius_act(inv, x), 0))


@settings(max_examples=200)
@given(mobius_maps(), complexes, heights, complexes)
def test_visual_metric_equivariant(m, xi, t, z):
    if abs(m.c * z + m.d) < 1e-2:
        return
    x = H3Point(xi, t)
    lhs = visual_metric(mobius_act(m, x), m(z)) * abs(m.derivative(z))
    assert lhs == pytest.approx(visual_metric(x, z), rel=1e-8)


@given(mobius_maps(), complexes, heights, complexes, heights)
def test_mobius_act_is_isometry(m, a, s, b, t):
    x, y = H3Point(a, s), H3Point(b, t)
    d = hyperbolic_distance(x, y)
    assert hyperbolic_distance(mobius_act(m, x), mobius_act(m, y)) == pytest.approx(d, rel=1e-7, abs=1e-7)


def test_horosphere_examples():
    h = horosphere_from(0, 2)
    assert h.euclidean_radius == pytest.approx(0.5)
    assert h.top.xi == 0 and h.top.t == pytest.approx(1.0)
    assert horosphere_from(0, 1).euclidean_radius == pytest.approx(1.0)
    h = horosphere_from(1 + 1j, 4)
    assert h.base == 1 + 1j and h.euclidean_radius == pytest.approx(0.25)
    assert horosphere_from(INF, 3).euclidean_radius == pytest.approx(1.5)
    with pytest.raises(DomainError):
        horosphere_from(0, 0)


@given(complexes, st.floats(0.1, 10), st.floats(0, 2 * np.pi), st.floats(0.01, 3.1))
def test_horosphere_is_level_set(z, rho, theta, phi):
    h = horosphere_from(z, rho)
    r = h.euclidean_radius
    x = H3Point(z + r * math.sin(phi) * cmath.exp(1j * theta), r + r * math.cos(phi))
    assert abs(h.residual(x)) < 1e-12
    assert visual_metric(x, z) == pytest.approx(rho, rel=1e-9)


def test_hyperbolic_distance_examples():
    assert hyperbolic_distance(H3Point(0, 1), H3Point(0, math.e)) == pytest.approx(1.0)
    assert hyperbolic_distance(H3Point(1j, 2), H3Point(1j, 2)) == 0
    assert hyperbolic_distance(H3Point(0, 1), H3Point(1, 1)) == pytest.approx(2 * math.asinh(0.5))


@given(complexes, heights, complexes, heights, complexes, heights)
def test_distance_triangle(a, s, b, t, c, u):
    x, y, w = H3Point(a, s), H3Point(b, t), H3Point(c, u)
    assert hyperbolic_distance(x, y) == pytest.approx(hyperbolic_distance(y, x))
    assert hyperbolic_distance(x, w) <= hyperbolic_distance(x, y) + hyperbolic_distance(y, w) + 1e-9


def test_hyperboloid_agrees_with_distance(rng):
    for _ in range(50):
        x = H3Point(complex(*rng.normal(size=2)), rng.uniform(0.2, 2))
        y = H3Point(complex(*rng.normal(size=2)), rng.uniform(0.2, 2))
        X, Y = hyperboloid_point(x), hyperboloid_point(y)
        assert minkowski_dot(X, X) == pytest.approx(-1)
        assert math.acosh(-minkowski_dot(X, Y)) == pytest.approx(hyperbolic_distance(x, y), rel=1e-9)


def test_flow_examples():
    v = UnitTangent(H3Point(0, 1), (0, 0, 1))
    w = geodesic_flow(v, math.log(2))
    assert w.base.t == pytest.approx(2.0) and abs(w.base.xi) < 1e-15
    assert w.direction == pytest.approx((0, 0, 1))
    v = UnitTangent(H3Point(0.3j, 0.7), (0.6, 0, 0.8))
    assert geodesic_flow(v, 0.0).base == v.base
    h = UnitTangent(H3Point(0, 1), (1, 0, 0))
    far = geodesic_flow(h, 30.0)
    assert abs(far.base.xi - 1) < 1e-12 and far.base.t < 1e-12


def _random_tangent(rng):
    d = rng.normal(size=3)
    return UnitTangent(H3Point(complex(*rng.normal(size=2)), rng.uniform(0.2, 2)), d)


def test_flow_is_unit_speed_and_group(rng):
    for _ in range(200):
        v = _random_tangent(rng)
        s, u = rng.uniform(-3, 3, size=2)
        a = geodesic_flow(geodesic_flow(v, s), u)
        b = geodesic_flow(v, s + u)
        assert hyperbolic_distance(a.base, b.base) < 1e-9
        assert np.allclose(a.direction, b.direction, atol=1e-8)
        assert hyperbolic_distance(v.base, b.base) == pytest.approx(abs(s + u), abs=1e-9)


def test_flow_stays_on_geodesic(rng):
    for _ in range(100):
        v = _random_tangent(rng)
        ends = geodesic_endpoints(v)
        for s in (-2.0, 0.5, 4.0):
            w = geodesic_flow(v, s)
            assert geodesic_endpoints(w)[0] == pytest.approx(ends[0]) if ends[0] is not INF else True
            assert geodesic_endpoints(w)[1] == pytest.approx(ends[1]) if ends[1] is not INF else True


def test_flow_preserves_distances_between_parallel_tangents(rng):
    for _ in range(50):
        v = _random_tangent(rng)
        w = geodesic_flow(v, rng.uniform(-1, 1))
        s = rng.uniform(-2, 2)
        d0 = hyperbolic_distance(v.base, w.base)
        d1 = hyperbolic_distance(geodesic_flow(v, s).base, geodesic_flow(w, s).base)
        assert d1 == pytest.approx(d0, abs=1e-9)


def _max_visual_over_hemisphere(c, r, z):
    def neg(p):
        phi, th = p
        if not 0 < phi < np.pi / 2:
            return 0.0
        x = H3Point(c + r * math.sin(phi) * cmath.exp(1j * th), r * math.cos(phi))
        return -visual_metric(x, z)

    best = None
    for phi0 in (0.2, 0.8, 1.3):
        for th0 in np.linspace(0, 2 * np.pi, 6, endpoint=False):
            res = minimize(neg, [phi0, th0], method="Nelder-Mead",
                           options={"xatol": 1e-12, "fatol": 1e-14, "maxiter": 4000})
            if best is None or res.fun < best.fun:
                best = res
    phi, th = best.x
    return H3Point(c + r * math.sin(phi) * cmath.exp(1j * th), r * math.cos(phi))


def test_project_to_plane_examples():
    unit = GeodesicPlane(RoundDisk.unit())
    x = project_to_plane(unit, 0)
    assert abs(x.xi) < 1e-14 and x.t == pytest.approx(1)
    x = project_to_plane(unit, 0.5)
    oracle = _max_visual_over_hemisphere(0, 1, 0.5)
    assert hyperbolic_distance(x, oracle) < 1e-6
    x = project_to_plane(GeodesicPlane(RoundDisk.upper_half_plane()), 1j)
    assert abs(x.xi) < 1e-14 and x.t == pytest.approx(1)
    with pytest.raises(DomainError):
        project_to_plane(unit, 1.0)


def test_projection_is_horosphere_tangency(rng):
    for _ in range(50):
        c = complex(*rng.normal(size=2))
        r = rng.uniform(0.3, 2)
        z = c + r * rng.uniform(0, 0.95) * cmath.exp(2j * np.pi * rng.uniform())
        plane = GeodesicPlane(RoundDisk.circle(c, r))
        x = project_to_plane(plane, z)
        assert plane.contains(x)
        h = horosphere_from(z, visual_metric(x, z))
        assert abs(h.residual(x)) < 1e-12
        # every other sampled plane point is outside that horosphere
        for phi in np.linspace(0.05, 1.5, 7):
            for th in np.linspace(0, 2 * np.pi, 9):
                y = H3Point(c + r * math.sin(phi) * cmath.exp(1j * th), r * math.cos(phi))
                assert h.residual(y) >= -1e-9


def test_projection_matches_maximization_oracle(rng):
    for _ in range(5):
        c = complex(*rng.normal(size=2))
        r = rng.uniform(0.5, 2)
        z = c + r * rng.uniform(0, 0.9) * cmath.exp(2j * np.pi * rng.uniform())
        x = project_to_plane(GeodesicPlane(RoundDisk.circle(c, r)), z)
        assert hyperbolic_distance(x, _max_visual_over_hemisphere(c, r, z)) < 1e-5


def test_exterior_and_infinity_projection():
    ext = GeodesicPlane(RoundDisk.circle(0, 1, inside=False))
    x = project_to_plane(ext, INF)
    assert abs(x.xi) < 1e-14 and x.t == pytest.approx(1)
    x = project_to_plane(ext, 3.0)
    assert ext.contains(x)


def test_signed_distance():
    plane = GeodesicPlane(RoundDisk.unit())
    assert plane.signed_distance(H3Point(0, math.e)) == pytest.approx(1.0)
    assert plane.signed_distance(H3Point(0, 1 / math.e)) == pytest.approx(-1.0)


def test_project_to_geodesic(rng):
    x = project_to_geodesic(-1, 1, 0)
    assert abs(x.xi) < 1e-14 and x.t == pytest.approx(1)
    x = project_to_geodesic(0, INF, 2j)
    assert abs(x.xi) < 1e-14 and x.t == pytest.approx(2)
    for _ in range(20):
        p, q, z = (complex(*rng.normal(size=2)) for _ in range(3))
        foot = project_to_geodesic(p, q, z)
        # the foot maximizes the visual density of z along the geodesic
        m = MobiusMap(1, -p, 1, -q).inverse()

        def neg(s):
            return -visual_metric(mobius_act(m, H3Point(0, math.exp(s))), z)

        best = minimize_scalar(neg, bracket=(-1, 1), tol=1e-12)
        y = mobius_act(m, H3Point(0, math.exp(best.x)))
        assert hyperbolic_distance(foot, y) < 1e-5
