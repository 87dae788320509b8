import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from epstein_kit.domains import Annulus, ConformalMetric
from epstein_kit.errors import CriticalPointError, UnsupportedError
from epstein_kit.riemann_sphere import MobiusMap
from epstein_kit.schwarzian import (
    CATALOG_NAMES,
    HolomorphicJet,
    PolarRegion,
    QuadraticDifferential,
    catalog,
    compose_jets,
    compose_schwarzian,
    image_differential,
    l2_norm,
    schwarzian_at,
    schwarzian_differential,
    schwarzian_norm,
    sup_norm,
    univalent_catalog,
)


def fd_jet(f, z, h=1e-3):
    """Derivatives from a 7-point complex stencil on the real direction."""
    s = np.arange(-3, 4)
    vals = np.array([f(z + k * h) for k in s])
    # exact for polynomials of degree 6
    V = np.vander(s * h, 7, increasing=True)
    coef = np.linalg.solve(V, vals)
    return coef[1], 2 * coef[2], 6 * coef[3]


def power_jet(c, z):
    return HolomorphicJet(z**c, c * z ** (c - 1), c * (c - 1) * z ** (c - 2), c * (c - 1) * (c - 2) * z ** (c - 3))


def test_mobius_schwarzian_zero():
    m = MobiusMap(1 + 2j, 3, -1j, 2)
    for z in [0.1, 1 + 1j, -1j]:
        assert abs(schwarzian_at(HolomorphicJet(*m.jet(z)))) < 1e-12


def test_koebe_value():
    k = catalog("koebe")
    assert k.schwarzian_at(0.0) == pytest.approx(-6)
    assert schwarzian_at(power_jet(3.0, 2.0)) == pytest.approx((1 - 9) / 8)


def test_critical_point():
    with pytest.raises(CriticalPointError):
        schwarzian_at(HolomorphicJet(0, 0, 1, 0))


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_jets_match_finite_differences(name):
    e = catalog(name)
    for z in np.asarray(e.domain.sample_points(3, 4))[1::3]:
        z = complex(z)
        if e.domain.distance_to_boundary(z) < 0.1:
            continue
        j = e.jet(z)
        d1, d2, d3 = fd_jet(e, z, h=min(1e-2, e.domain.distance_to_boundary(z) / 10))
        scale = 1 + abs(j.df) + abs(j.d2f) + abs(j.d3f)
        assert abs(j.df - d1) < 1e-6 * scale
        assert abs(j.d2f - d2) < 1e-5 * scale
        assert abs(j.d3f - d3) < 1e-3 * scale


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_closed_form_schwarzian(name):
    e = catalog(name)
    z = np.asarray(e.domain.sample_points(6, 12), dtype=complex)
    jet_S = e.schwarzian_at(z)
    closed = e.schwarzian(z)
    assert np.max(np.abs(jet_S - closed) / (1 + np.abs(closed))) < 1e-10


def test_cocycle_squarings():
    z = 2.0
    sq = lambda w: HolomorphicJet(w * w, 2 * w, 2.0, 0.0)
    S_sq = lambda w: schwarzian_at(sq(w))
    g = sq(z)
    via_cocycle = compose_schwarzian(S_sq(g.f), g, S_sq(z))
    assert via_cocycle == pytest.approx((1 - 16) / (2 * 4))
    assert schwarzian_at(compose_jets(sq(g.f), g)) == pytest.approx(via_cocycle)


def test_cocycle_trivial_cases():
    g = HolomorphicJet(*MobiusMap(1, 2, 3, 7).jet(0.3))
    assert compose_schwarzian(0.0, g, 0.4 + 1j) == 0.4 + 1j
    ident = HolomorphicJet(0.3, 1, 0, 0)
    assert compose_schwarzian(2.5 - 1j, ident, 0.0) == 2.5 - 1j


@settings(max_examples=50)
@given(st.floats(0.2, 1.8), st.floats(-0.6, 0.6), st.floats(-0.6, 0.6))
def test_cocycle_associative(c, x, y):
    z = complex(0.4 + abs(x), y)
    h = HolomorphicJet(*MobiusMap(1, 0.5, 0.2, 1).jet(z))
    g_at = lambda w: power_jet(c, w)
    f_at = lambda w: HolomorphicJet(np.log(w), 1 / w, -1 / w**2, 2 / w**3)
    S = lambda j: schwarzian_at(j)
    # (f o g) o h
    gh = g_at(h.f)
    fg_S = compose_schwarzian(S(f_at(g_at(h.f).f)), gh, S(gh))
    left = compose_schwarzian(fg_S, h, S(h))
    # f o (g o h)
    gh_jet = compose_jets(gh, h)
    right = compose_schwarzian(S(f_at(gh_jet.f)), gh_jet, compose_schwarzian(S(gh), h, S(h)))
    assert abs(left - right) < 1e-10 * (1 + abs(left))


def test_norm_examples():
    q = schwarzian_differential(catalog("koebe"))
    assert schwarzian_norm(q, 0) == pytest.approx(1.5)
    assert schwarzian_norm(q, 0.5) == pytest.approx(1.5)
    assert schwarzian_norm(schwarzian_differential(catalog("mobius")), 0.3j) == pytest.approx(0, abs=1e-12)


def test_koebe_sup_saturates():
    res = sup_norm(schwarzian_differential(catalog("koebe")))
    assert abs(res.value - 1.5) < 1e-6
    assert res.value >= res.grid_value


def test_mobius_sup_zero():
    assert sup_norm(schwarzian_differential(catalog("mobius"))).value < 1e-12


def test_sup_refinement_monotone():
    q = schwarzian_differential(catalog("sector", c=1.5))
    coarse = sup_norm(q, 6, 12, refine=False).value
    fine = sup_norm(q, 24, 48, refine=False).value
    refined = sup_norm(q, 24, 48).value
    assert coarse <= fine + 1e-9 <= refined + 2e-9
    assert refined == pytest.approx(abs(1 - 1.5**2) / 2, abs=1e-6)


@pytest.mark.parametrize("entry", univalent_catalog(), ids=lambda e: f"{e.name}{e.params or ''}")
def test_univalent_maps_obey_nehari(entry):
    assert sup_norm(schwarzian_differential(entry)).value <= 1.5 + 1e-6


@pytest.mark.parametrize("R", [1.5, 2.0, 4.0])
def test_annulus_image_differential_is_pushdown(R):
    e = catalog("annulus_cover", R=R)
    q = image_differential(e)
    src = schwarzian_differential(e)
    z = np.asarray(UnitDiskSamples(), dtype=complex)
    j = e.jet(z)
    # phi(f(z)) f'(z)^2 = Sf(z), and the norms agree pointwise
    assert np.max(np.abs(q.phi(j.f) * j.df**2 - e.schwarzian_at(z)) / np.abs(e.schwarzian_at(z))) < 1e-10
    assert np.max(np.abs(q.norm(j.f) - src.norm(z))) < 1e-9


def UnitDiskSamples():
    from epstein_kit.domains import UnitDisk
    return UnitDisk().sample_points(6, 12)


@pytest.mark.parametrize("R", [1.5, 2.0, 4.0])
def test_annulus_norm_profile(R):
    ann = Annulus(R)
    q = image_differential(catalog("annulus_cover", R=R))
    pts = ann.sample_points(9, 7)
    expected = (1 + ann.alpha**2) / 2 * np.sin(ann.angle(pts)) ** 2
    assert np.allclose(q.norm(pts), expected, rtol=1e-10)
    # rotation invariance: the norm only depends on |z|
    assert q.norm(1.2) == pytest.approx(q.norm(1.2 * cmath.exp(0.7j)))


@pytest.mark.parametrize("R", [1.5, 2.0, 4.0])
def test_kra_maskit_on_annulus(R, rng):
    ann = Annulus(R)
    q = image_differential(catalog("annulus_cover", R=R))
    r = np.exp(rng.uniform(-np.log(R), np.log(R), 1000) * 0.999)
    z = r * np.exp(2j * np.pi * rng.uniform(size=1000))
    bound = 1.5 / np.tanh(ann.injectivity_radius(z) / 2) ** 2
    assert np.all(q.norm(z) <= bound)


def test_automorphism_invariance(rng):
    e = catalog("koebe")
    for _ in range(20):
        a = 0.5 * complex(*rng.uniform(-1, 1, 2))
        gamma = MobiusMap.disk_automorphism(a, rng.uniform(0, 6))
        z = 0.6 * complex(*rng.uniform(-1, 1, 2)) / math.sqrt(2)
        gj = HolomorphicJet(*gamma.jet(z))
        S_comp = schwarzian_at(compose_jets(e.jet(gj.f), gj))
        lhs = abs(S_comp) / (2 / (1 - abs(z) ** 2)) ** 2
        rhs = abs(e.schwarzian_at(gj.f)) / (2 / (1 - abs(gj.f) ** 2)) ** 2
        assert lhs == pytest.approx(rhs, rel=1e-9)


def test_l2_zero():
    ann = Annulus(2.0)
    q = QuadraticDifferential(lambda z: 0.0 * z, ConformalMetric.hyperbolic(ann), ann)
    assert l2_norm(q, PolarRegion(0, 1 / 2.0, 2.0)).value == 0


@pytest.mark.parametrize("width", [0.3, 1.0])
def test_l2_constant_norm_collar(width):
    ann = Annulus(3.0)
    rho = ConformalMetric.hyperbolic(ann)
    c = 0.7
    q = QuadraticDifferential(lambda z: c * rho(z) ** 2, rho, ann)
    # collar {distance to core <= width}: angle with |log tan(angle/2)| <= width
    th1, th2 = 2 * np.arctan(np.exp(-width)), 2 * np.arctan(np.exp(width))
    r1, r2 = np.exp(ann.alpha * th1) / 3.0, np.exp(ann.alpha * th2) / 3.0
    area = 2 * ann.core_length * math.sinh(width)
    res = l2_norm(q, PolarRegion(0, r1, r2))
    assert res.value == pytest.approx(c * math.sqrt(area), rel=1e-9)


@pytest.mark.parametrize("R", [1.5, 3.0])
def test_l2_annulus_closed_form(R):
    ann = Annulus(R)
    q = image_differential(catalog("annulus_cover", R=R))
    a = ann.alpha
    # separable integral: (2 pi) * (1 + a^2)^2 / (4 a) * integral of sin^2 over (0, pi)
    expected = math.sqrt(math.pi**2 * (1 + a * a) ** 2 / (4 * a))
    res = l2_norm(q, PolarRegion(0, 1 / R, R))
    assert res.value == pytest.approx(expected, rel=1e-9)
    assert res.error < 1e-6


def test_pointwise_l2_bound(rng):
    for R in (1.5, 2.0, 3.0):
        ann = Annulus(R)
        q = image_differential(catalog("annulus_cover", R=R))
        total = l2_norm(q, PolarRegion(0, 1 / R, R)).value
        z = np.exp(rng.uniform(-0.99, 0.99, 200) * np.log(R))
        lower = 2 * math.sqrt(math.pi / 3) * np.tanh(ann.injectivity_radius(z) / 2) ** 2 * q.norm(z)
        assert np.all(total >= lower)


def test_koebe_l2_monte_carlo():
    q = schwarzian_differential(catalog("koebe"))
    res = l2_norm(q, PolarRegion(0, 0, 0.5))
    rng = np.random.default_rng(2024)
    n = 10**6
    r = 0.5 * np.sqrt(rng.uniform(size=n))
    z = r * np.exp(2j * np.pi * rng.uniform(size=n))
    vals = np.abs(q.phi(z)) ** 2 / q.metric(z) ** 2 * (np.pi * 0.25)
    mean, se = vals.mean(), vals.std() / math.sqrt(n)
    assert abs(res.value**2 - mean) < 3 * se


def test_unknown_map():
    with pytest.raises(UnsupportedError):
        catalog("zhukovsky")
