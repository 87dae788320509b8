import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from epstein_kit.errors import DomainError, GeometryError
from epstein_kit.halfspace import H3Point, hyperbolic_distance, visual_metric
from epstein_kit.schwarzian import PolarRegion, catalog, image_differential
from epstein_kit.wvolume import (
    ConvexRevolutionBody,
    GradientPair,
    body_integrals,
    contact_point,
    mean_curvature_identity_residual,
    metric_at_infinity,
    metric_at_infinity_area,
    teichmuller_norm,
    w_volume,
    w_volume_alternate,
    wp_gradient,
    wp_pairing,
)

SPINDLE = ConvexRevolutionBody.spindle(1.0, 0.5, 3.0, 0.8)


@pytest.mark.parametrize("r", [0.3, 1.0, 2.0])
def test_ball_quadrature_matches_closed_forms(r):
    ball = ConvexRevolutionBody.ball(r, 1.7)
    exact = body_integrals(ball)
    quad = body_integrals(ball, closed_form=False)
    for a, b in zip(exact[:4], quad[:4]):
        assert b == pytest.approx(a, rel=1e-10)
    assert w_volume(ball) == pytest.approx(-2 * math.pi * r, rel=1e-12)


def test_point_ball_has_zero_integrals():
    p = ConvexRevolutionBody.ball(0.0)
    assert w_volume(p) == 0.0
    assert w_volume_alternate(p) == pytest.approx(0.0, abs=1e-14)


@pytest.mark.parametrize("z", [0j, 0.4, 2 + 1j, -30j])
def test_ball_contact_point(z):
    ball = ConvexRevolutionBody.ball(0.7, 1.3)
    center = H3Point(0j, 1.3)
    for closed in (True, False):
        x = contact_point(ball, z, closed)
        assert hyperbolic_distance(x, center) == pytest.approx(0.7, rel=1e-9)
        # the ray from the center through x ends at z, so the density scales by e^r
        assert metric_at_infinity(ball, z, closed) == pytest.approx(
            math.exp(0.7) * visual_metric(center, z), rel=1e-9)


def test_ball_metric_area():
    ball = ConvexRevolutionBody.ball(0.7, 1.3)
    val, err = metric_at_infinity_area(ball)
    assert val == pytest.approx(4 * math.pi * math.exp(1.4), rel=1e-9)
    assert err < 1e-6


def test_spindle_two_routes_agree():
    assert w_volume_alternate(SPINDLE) == pytest.approx(w_volume(SPINDLE), abs=1e-5)


def test_spindle_mean_curvature_identity():
    check = mean_curvature_identity_residual(SPINDLE)
    assert check.residual < 1e-5
    assert check.pullback_residual < 1e-5


def test_spindle_bottom_contact():
    assert metric_at_infinity(SPINDLE, 0j) == pytest.approx(2 * math.exp(0.5) / 1.0, rel=1e-12)


@pytest.mark.parametrize("s", [0.25, 1.0])
def test_neighborhood_scaling(s):
    far = SPINDLE.neighborhood(s)
    assert w_volume(far) - w_volume(SPINDLE) == pytest.approx(-2 * math.pi * s, abs=1e-7)
    assert mean_curvature_identity_residual(far).residual < 1e-5


@pytest.mark.parametrize("z", [0.05, 0.6, 2.0, 9.0])
def test_metric_at_infinity_flows_by_exponential(z):
    s = 0.6
    ratio = metric_at_infinity(SPINDLE.neighborhood(s), z) / metric_at_infinity(SPINDLE, z)
    assert math.log(ratio) == pytest.approx(s, abs=1e-9)


def test_profile_is_convex_and_continuous():
    for body in (SPINDLE, SPINDLE.neighborhood(0.5)):
        prof = body.sample_profile(40)
        for _, p in prof:
            assert np.all(p.kappa_meridian >= -1e-12)
            k = p.kappa_parallel  # undefined on the axis
            assert np.all(k[np.isfinite(k)] >= -1e-12)
        for (_, a), (_, b) in zip(prof, prof[1:]):
            assert a.x[-1] == pytest.approx(b.x[0], abs=1e-9)
            assert a.t[-1] == pytest.approx(b.t[0], rel=1e-9)
            assert a.nx[-1] == pytest.approx(b.nx[0], abs=1e-9)


def test_meridian_curvature_flow_law():
    s = 0.4
    base = SPINDLE.pieces()[1](np.array([0.5]))
    flowed = SPINDLE.neighborhood(s).pieces()[1](np.array([0.5]))
    assert base.kappa_meridian[0] == 0.0
    assert flowed.kappa_meridian[0] == pytest.approx(math.tanh(s), rel=1e-14)


def test_parallel_curvature_on_ball_is_coth():
    ball = ConvexRevolutionBody.ball(0.9)
    p = ball.pieces()[0](np.linspace(0.1, 0.9, 7))
    assert np.allclose(p.kappa_parallel, 1 / math.tanh(0.9), rtol=1e-12)


@settings(max_examples=15, deadline=None)
@given(st.floats(0.2, 1.5), st.floats(0.2, 1.5), st.floats(1.0, 3.0))
def test_spindle_identities_hold(r1, r2, gap):
    body = ConvexRevolutionBody.spindle(1.0, r1, math.exp(abs(r1 - r2) + gap), r2)
    assert mean_curvature_identity_residual(body).residual < 1e-5


def test_invalid_bodies():
    with pytest.raises(DomainError):
        ConvexRevolutionBody.ball(-1.0)
    with pytest.raises(GeometryError):
        ConvexRevolutionBody.spindle(1.0, 2.0, 1.5, 0.5)
    with pytest.raises(DomainError):
        SPINDLE.neighborhood(-0.1)
    with pytest.raises(GeometryError):
        SPINDLE.radius


@pytest.mark.parametrize("R", [2.0, 3.0, 6.0])
def test_wp_pairing_on_annulus(R):
    alpha = 2 * math.log(R) / math.pi
    q = image_differential(catalog("annulus_cover", R=R))
    pair = GradientPair(q, PolarRegion(0j, 1 / R, R))
    value, err = wp_pairing(pair, lambda z: wp_gradient(pair, z))
    assert value == pytest.approx(-math.pi**2 * (1 + alpha**2) ** 2 / (4 * alpha), abs=1e-6)
    assert err < 1e-6
    twice, _ = wp_pairing(pair, lambda z: 2 * wp_gradient(pair, z))
    assert twice == pytest.approx(2 * value, rel=1e-10)


def test_teichmuller_norm_on_core_circle():
    R = 3.0
    alpha = 2 * math.log(R) / math.pi
    pair = GradientPair(image_differential(catalog("annulus_cover", R=R)), PolarRegion(0j, 1 / R, R))
    pts = np.exp(1j * np.linspace(0, 2 * math.pi, 9))
    assert teichmuller_norm(pair, pts) == pytest.approx((1 + alpha**2) / 2, rel=1e-12)
