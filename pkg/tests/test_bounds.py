import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from epstein_kit import bounds as B
from epstein_kit.domains import Annulus
from epstein_kit.errors import DomainError

LIMIT_SLOPE = 2 + 2 * math.sqrt(3 / math.pi)


def _excess_by_composition(eps):
    # pointwise L2 bound on a ball of radius eps^2, then the local comparison on radius -log(eps)
    K = B.l2_pointwise_bound(eps**5, eps**2)
    return B.local_anderson_factor(K, -math.log(eps)) - 1


@given(st.floats(1e-4, 0.999))
def test_thick_excess_matches_composition(eps):
    assert B.thick_part_excess(eps) == pytest.approx(_excess_by_composition(eps), rel=1e-12)


def test_thick_excess_edges():
    assert B.thick_part_excess(0.0) == 0.0
    assert B.thick_part_excess(1.0) == math.inf
    with pytest.raises(DomainError):
        B.thick_part_excess(-0.1)


def test_thick_excess_linear_slope():
    # expanding sqrt(1 + 4 sqrt(3/pi) eps) (1 + 2 eps) to first order
    for t in (1e-6, 1e-8):
        assert B.thick_part_excess(t) / t == pytest.approx(LIMIT_SLOPE, rel=1e-5)
    second = (B.thick_part_excess(2e-4) / 2e-4 - B.thick_part_excess(1e-4) / 1e-4) / 1e-4
    assert abs(second) < 100


def test_bending_factor_fifth_root_scaling():
    r = (B.l2_bending_factor(1e-10) / 1e-10**0.2) / (B.l2_bending_factor(1e-12) / 1e-12**0.2)
    assert abs(r - 1) < 0.02
    K = 1.5
    limit = 2 * LIMIT_SLOPE + 3 * (1 + 2 * K) / (2 * math.pi)
    assert B.l2_bending_factor(1e-40, K) / 1e-8 == pytest.approx(limit, rel=1e-6)


def test_bending_terms_assemble():
    terms = B.l2_bending_terms(1e-7, K=0.8)
    F = terms.thick_excess
    assert terms.epsilon == pytest.approx(1e-7**0.2, rel=1e-15)
    assert terms.value == pytest.approx(2 * F + F * F + 3 * terms.epsilon / (2 * math.pi) * 2.6, rel=1e-14)
    assert terms.asymptotic
    assert not B.l2_bending_terms(1e-4).asymptotic
    assert B.l2_bending_terms(1e-5).asymptotic


def test_bending_factor_monotone_on_table_range():
    t = np.logspace(-3, 0, 25)
    g = [B.l2_bending_factor(v) for v in t]
    assert all(b > a for a, b in zip(g, g[1:]))


def test_volume_defect():
    assert B.l2_volume_defect(1e-6) == pytest.approx(math.pi * B.l2_bending_factor(1e-6, 1.5), rel=1e-15)


@pytest.mark.parametrize("chi", [-2, -4, -10])
def test_bending_bounds(chi):
    assert B.bending_bound_sup(chi, 1.5) == pytest.approx(4 * math.pi * abs(chi) * 1.5, rel=1e-15)
    assert B.bending_bound_incompressible(chi) == 6 * math.pi * abs(chi)
    assert B.bending_bound_sup(chi, 1.5) == pytest.approx(B.bending_bound_incompressible(chi), rel=1e-15)
    assert B.bending_bound_compressible(chi, 200.0) == pytest.approx(B.bending_bound_incompressible(chi), rel=1e-15)
    assert B.bending_bound_compressible(chi, 1.0) > B.bending_bound_incompressible(chi)
    assert B.bending_bound_short_curve(chi, 2.0, 3.0, 5.0) == pytest.approx(6.5 * abs(chi), rel=1e-15)
    assert B.bending_bound_l2(chi, 1e-8) == pytest.approx(2 * math.pi * abs(chi) * B.l2_bending_factor(1e-8))


def test_twelve_pi_examples():
    assert B.bending_bound_sup(-2, 1.5) == pytest.approx(12 * math.pi, abs=1e-12)
    assert B.bending_bound_incompressible(-2) == pytest.approx(12 * math.pi, abs=1e-12)


def test_bad_parameters():
    with pytest.raises(DomainError):
        B.bending_bound_compressible(-2, 0.0)
    with pytest.raises(DomainError):
        B.bending_bound_short_curve(-2, -1.0, 1, 1)
    with pytest.raises(DomainError):
        B.anderson_factor(-1)
    with pytest.raises(DomainError):
        B.bending_from_area(1.0, -2)


def test_lipschitz_constants():
    assert B.retraction_lipschitz(1.5) == 2.0
    assert B.retraction_lipschitz_compressible(400.0) == pytest.approx(2.0, rel=1e-15)
    assert B.retraction_lipschitz_planar(200.0) == pytest.approx(2.0, rel=1e-15)
    # the compressible constant uses delta/4, so it is the planar one at 2 delta
    assert B.retraction_lipschitz_compressible(3.0) == pytest.approx(B.retraction_lipschitz_planar(1.5), rel=1e-15)


@given(st.floats(0, 100), st.integers(-20, -1))
def test_area_bending_round_trip(length, chi):
    assert B.bending_from_area(B.area_from_bending(length, chi), chi) == pytest.approx(length, abs=1e-9)


@given(st.floats(-50, 50), st.floats(0, 30), st.integers(-10, -1), st.floats(0, 1e-3))
def test_volume_chain(vc, length, chi, t):
    lo, hi, l2lo = B.volume_bound_chain(vc, length, chi, t)
    assert lo <= hi <= vc
    assert l2lo <= vc


def test_volume_chain_degenerate():
    assert B.volume_bound_chain(3.0, 0.0, -2, 0.5)[:2] == (3.0, 3.0)
    assert B.volume_bound_chain(3.0, 1.0, -2, 0.0)[2] == 3.0
    assert B.renormalized_volume(5.0, 0.5) == 4.75


def test_kra_maskit_bounds_annulus_cover():
    dom = Annulus(3.0)
    a = dom.alpha
    for z in (1.0, 1.5j, -0.6 + 0.2j, 2.5):
        norm = (1 + a * a) / 2 * math.sin(dom.angle(z)) ** 2
        assert norm <= B.kra_maskit_bound(dom.injectivity_radius(z))
    assert B.kra_maskit_lower_bound(dom.core_length) <= (1 + a * a) / 2


def test_anderson_factors():
    assert B.anderson_factor(0) == 1
    assert B.local_anderson_factor(1.5, 300.0) == pytest.approx(2.0, rel=1e-15)
