"""Verification suites: each check samples an identity or inequality and reports its worst case.

A check records the statement it tests, how many samples it used, the worst
observed value and the bound that value is compared with.  Suites are run in a
fixed order with a generator seeded from (seed, suite index), so reports are
byte-identical for a fixed seed and config.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

import numpy as np

from . import bounds as B
from .config import format_config, load_config
from .domains import (
    Annulus,
    ConformalMetric,
    PlaneDomain,
    SlitPlane,
    Strip,
    TwoDiskUnion,
    UnitDisk,
    _disk_grid,
    boundary_samples,
)
from .domes import build_dome, dome_epstein_identity_check, dome_retract, lipschitz_estimate
from .epstein import (
    EpsteinInput,
    convexity_time_from_norm,
    epstein_flow,
    epstein_frame,
    flowed_curvature,
    principal_curvatures_analytic,
    principal_curvatures_numeric,
)
from .errors import UnsupportedError
from .halfspace import hyperbolic_distance
from .metrics import slit_thurston_metric, thurston_metric, thurston_pullback
from .riemann_sphere import MobiusMap, RoundDisk, round_disk_metric
from .schwarzian import (
    HolomorphicJet,
    PolarRegion,
    QuadraticDifferential,
    ball_sup_norm,
    catalog,
    compose_jets,
    compose_schwarzian,
    image_differential,
    l2_norm,
    schwarzian_at,
    schwarzian_differential,
    sup_norm,
    univalent_catalog,
)
from .wvolume import (
    ConvexRevolutionBody,
    GradientPair,
    mean_curvature_identity_residual,
    metric_at_infinity,
    w_volume,
    w_volume_alternate,
    wp_gradient,
    wp_pairing,
)

__all__ = ["Check", "VerifySuiteReport", "SUITES", "run_suite", "run_verify"]


class Check(NamedTuple):
    statement: str
    claim: str
    samples: int
    worst: float
    relation: str  # "<=" or ">="
    bound: float

    @property
    def passed(self) -> bool:
        if not math.isfinite(self.worst):
            return False
        return self.worst <= self.bound if self.relation == "<=" else self.worst >= self.bound


def _at_most(statement, claim, samples, worst, bound):
    # adding 0.0 turns a negative zero into zero
    return Check(statement, claim, int(samples), float(worst) + 0.0, "<=", float(bound))


def _at_least(statement, claim, samples, worst, bound):
    return Check(statement, claim, int(samples), float(worst) + 0.0, ">=", float(bound))


@dataclass
class VerifySuiteReport:
    suite: str
    seed: int
    checks: list
    config: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def text(self) -> str:
        lines = [f"suite {self.suite}", f"seed {self.seed}", "config"]
        lines += [f"  {line}" for line in self.config]
        lines.append("checks")
        for c in self.checks:
            lines.append(f"  {'PASS' if c.passed else 'FAIL'}  {c.statement}  samples={c.samples}  "
                         f"worst={c.worst:.6e} {c.relation} {c.bound:.6e}")
            lines.append(f"        {c.claim}")
        lines.append(f"result {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def summary(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "checks": [dict(c._asdict(), passed=c.passed) for c in self.checks],
        }


# sampling helpers -------------------------------------------------------------

def _disk_points(rng, n, max_distance=3.0):
    d = rng.uniform(0.0, max_distance, n)
    return np.tanh(d / 2.0) * np.exp(2j * np.pi * rng.uniform(size=n))


def _disk_entries():
    return [e for e in univalent_catalog() if isinstance(e.domain, UnitDisk)]


# schwarzian ---------------------------------------------------------------------

def _suite_schwarzian(cfg, rng):
    checks = []
    koebe = sup_norm(schwarzian_differential(catalog("koebe")))
    checks.append(_at_most("koebe-saturation", "the Koebe map has sup norm 3/2", koebe.samples,
                           abs(koebe.value - 1.5), cfg["saturation_tol"]))

    entries = univalent_catalog()
    worst = max(sup_norm(schwarzian_differential(e)).value for e in entries) - 1.5
    checks.append(_at_most("nehari-bound", "univalent catalogue maps have sup norm at most 3/2",
                           len(entries), worst, cfg["nehari_tol"]))

    n = cfg["kra_maskit_samples"]
    worst = -math.inf
    for R in (1.5, 2.0, 4.0):
        ann = Annulus(R)
        q = image_differential(catalog("annulus_cover", R=R))
        z = np.exp(rng.uniform(-0.999, 0.999, n) * math.log(R) + 2j * np.pi * rng.uniform(size=n))
        bound = np.array([B.kra_maskit_bound(r) for r in ann.injectivity_radius(z)])
        worst = max(worst, float(np.max(q.norm(z) - bound)))
    checks.append(_at_most("kra-maskit", "covering-map Schwarzian norm is at most (3/2) coth^2(inj/2)",
                           3 * n, worst, 0.0))

    n = cfg["l2_samples"]
    worst = -math.inf
    for R in (1.5, 2.0, 3.0):
        ann = Annulus(R)
        q = image_differential(catalog("annulus_cover", R=R))
        total = l2_norm(q, PolarRegion(0j, 1 / R, R)).value
        z = np.exp(rng.uniform(-0.99, 0.99, n) * math.log(R))
        bound = np.array([B.l2_pointwise_bound(total, r) for r in ann.injectivity_radius(z)])
        worst = max(worst, float(np.max(q.norm(z) - bound)))
    checks.append(_at_most("l2-pointwise", "pointwise norm is bounded by the L2 norm over 2 sqrt(pi/3) tanh^2(inj/2)",
                           3 * n, worst, 0.0))

    n = cfg["invariance_samples"]
    k = catalog("koebe")
    worst = 0.0
    for _ in range(n):
        gamma = MobiusMap.disk_automorphism(0.5 * complex(*rng.uniform(-1, 1, 2)), rng.uniform(0, 2 * math.pi))
        z = complex(*rng.uniform(-0.42, 0.42, 2))
        g = HolomorphicJet(*gamma.jet(z))
        lhs = abs(schwarzian_at(compose_jets(k.jet(g.f), g))) * (1 - abs(z) ** 2) ** 2 / 4
        rhs = abs(k.schwarzian_at(g.f)) * (1 - abs(g.f) ** 2) ** 2 / 4
        worst = max(worst, abs(lhs - rhs) / rhs)
    checks.append(_at_most("automorphism-invariance", "the norm of S(f o gamma) at z equals that of Sf at gamma z",
                           n, worst, cfg["invariance_tol"]))

    n = cfg["cocycle_samples"]
    worst = 0.0
    inner = MobiusMap(1, 0.5, 0.2, 1)
    for _ in range(n):
        c = rng.uniform(0.2, 1.8)
        z = complex(0.4 + rng.uniform(0, 0.6), rng.uniform(-0.6, 0.6))
        h = HolomorphicJet(*inner.jet(z))

        def power(w):
            return HolomorphicJet(w**c, c * w ** (c - 1), c * (c - 1) * w ** (c - 2),
                                  c * (c - 1) * (c - 2) * w ** (c - 3))

        def log(w):
            return HolomorphicJet(np.log(w), 1 / w, -1 / w**2, 2 / w**3)

        g = power(h.f)
        left = compose_schwarzian(compose_schwarzian(schwarzian_at(log(g.f)), g, schwarzian_at(g)), h,
                                  schwarzian_at(h))
        gh = compose_jets(g, h)
        right = compose_schwarzian(schwarzian_at(log(gh.f)), gh,
                                   compose_schwarzian(schwarzian_at(g), h, schwarzian_at(h)))
        worst = max(worst, abs(left - right) / (1 + abs(left)))
    checks.append(_at_most("cocycle-associativity", "both groupings of a triple composition give one Schwarzian",
                           n, worst, cfg["cocycle_tol"]))
    return checks


# anderson -----------------------------------------------------------------------

def _witness_violation(domain, w, tol_points):
    t = thurston_metric(domain, w)
    D = t.witness
    if not D.contains(w):
        return math.inf
    # no boundary point of the domain may lie strictly inside the witness disk
    inside = max(-float(D.form(p)) / (1 + abs(p)) for p in tol_points)
    return max(inside, abs(round_disk_metric(D, w) - t.density) / t.density)


def _has_thurston_image(entry):
    image = entry.image
    return isinstance(image, RoundDisk) or (isinstance(image, PlaneDomain) and image.simply_connected)


def _suite_anderson(cfg, rng):
    checks = []
    tol = cfg["slack_tol"]
    koebe = catalog("koebe")
    K = sup_norm(schwarzian_differential(koebe)).value
    pts = _disk_points(rng, cfg["samples"])
    pull = np.array([thurston_pullback(koebe, complex(z)) for z in pts])
    rho = 2.0 / (1.0 - np.abs(pts) ** 2)
    checks.append(_at_least("anderson-koebe", "Thurston pullback is at most rho sqrt(1 + 2 ||Sf||) for Koebe",
                            len(pts), np.min(rho * B.anderson_factor(K) - pull), -tol))
    checks.append(_at_least("hyperbolic-below-thurston", "the hyperbolic metric is below the Thurston pullback",
                            len(pts), np.min(pull - rho), -tol))

    slit = SlitPlane()
    closed = slit_thurston_metric(slit)
    w = slit.sample_points(10, 12)
    w = w[rng.choice(len(w), cfg["samples"], replace=False)]
    hyp = slit.hyperbolic_density(w)
    checks.append(_at_least("anderson-slit-plane", "slit-plane Thurston density is at most twice the hyperbolic one",
                            len(w), np.min(hyp * B.anderson_factor(1.5) - closed(w)), -tol))
    sub = w[: cfg["catalog_samples"]]
    gap = max(abs(thurston_metric(slit, complex(v)).density - float(closed(v))) / float(closed(v)) for v in sub)
    checks.append(_at_most("slit-thurston-routes", "disk search and closed form agree on the slit plane",
                           len(sub), gap, tol))

    worst, count = math.inf, 0
    for e in univalent_catalog():
        if e.name == "koebe" or not _has_thurston_image(e):
            continue
        Ke = sup_norm(schwarzian_differential(e)).value
        if isinstance(e.domain, UnitDisk):
            zs = _disk_points(rng, cfg["catalog_samples"])
            dens = 2.0 / (1.0 - np.abs(zs) ** 2)
        else:
            zs = e.domain.sample_points(4, 8)
            zs = zs[rng.choice(len(zs), min(len(zs), cfg["catalog_samples"]), replace=False)]
            dens = np.asarray(e.domain.hyperbolic_density(zs), dtype=float)
        for z, d in zip(zs, dens):
            worst = min(worst, d * B.anderson_factor(Ke) - thurston_pullback(e, complex(z)))
        count += len(zs)
    checks.append(_at_least("anderson-catalogue", "the same bound for every univalent catalogue map",
                            count, worst, -tol))

    worst = math.inf
    n = cfg["local_samples"]
    for entry in (koebe, catalog("sector", c=1.5)):
        q = schwarzian_differential(entry)
        for z0, r in zip(_disk_points(rng, n, 2.0), rng.uniform(0.3, 3.0, n)):
            Kloc = ball_sup_norm(q, z0, r)
            rho0 = 2.0 / (1.0 - abs(z0) ** 2)
            worst = min(worst, rho0 * B.local_anderson_factor(Kloc, r) - thurston_pullback(entry, complex(z0)))
    checks.append(_at_least("anderson-local", "local bound with the ball sup norm and coth(r/2)",
                            2 * n, worst, -tol))

    worst, count = -math.inf, 0
    for dom in (SlitPlane(), TwoDiskUnion(0.3), TwoDiskUnion(0.7), Strip()):
        edge = boundary_samples(dom)
        for v in dom.sample_points(3, 4)[::2]:
            worst = max(worst, _witness_violation(dom, complex(v), edge))
            count += 1
    checks.append(_at_most("witness-validity", "witness disks contain the point and miss the boundary",
                           count, worst, cfg["witness_tol"]))
    return checks


# epstein ------------------------------------------------------------------------

def _curvature_error(inp, z, h):
    exact = np.sort(principal_curvatures_analytic(inp, z))
    num = np.array(principal_curvatures_numeric(inp, z, h=h))
    return float(np.max(np.abs(num - exact) / np.maximum(1.0, np.abs(exact))))


def _suite_epstein(cfg, rng):
    checks = []
    entries = _disk_entries()
    n = cfg["flow_samples"]
    worst = 0.0
    for _ in range(n):
        e = entries[rng.integers(len(entries))]
        z = complex(_disk_points(rng, 1, 2.5)[0])
        s = rng.uniform(-2.0, 3.0)
        inp = EpsteinInput(e, ConformalMetric.hyperbolic(e.domain))
        a, b = epstein_flow(inp, z, s), epstein_frame(inp, z, s)
        scale = max(1.0, abs(b.point.xi), b.point.t)
        gap = max(abs(a.point.xi - b.point.xi) / scale, abs(a.point.t - b.point.t) / scale,
                  float(np.max(np.abs(np.subtract(a.normal.direction, b.normal.direction)))))
        worst = max(worst, gap)
    checks.append(_at_most("normal-flow", "flowing the surface by s gives the surface of exp(s) rho",
                           n, worst, cfg["flow_tol"]))

    h = cfg["curvature_h"]
    worst_err, worst_order, count = 0.0, math.inf, 0
    # sectors are power maps precomposed with a Mobius map from the disk
    for name, params in (("koebe", {}), ("sector", {"c": 1.5}), ("sector", {"c": 0.5})):
        inp = EpsteinInput.hyperbolic(catalog(name, **params))
        for z in _disk_grid(3, 6, max_distance=2.0):
            z = complex(z)
            norm = abs(inp.f.schwarzian_at(z)) * (1 - abs(z) ** 2) ** 2 / 4
            if abs(norm - 1) < 0.2 or norm < 1e-3:
                continue
            e1, e2 = _curvature_error(inp, z, 2 * h), _curvature_error(inp, z, h)
            worst_err = max(worst_err, e2)
            if e2 > 1e-10:
                worst_order = min(worst_order, math.log2(e1 / e2))
            count += 1
    checks.append(_at_most("curvature-match", "finite-difference curvatures match -n/(n+1) and -n/(n-1)",
                           count, worst_err, cfg["curvature_tol"]))
    checks.append(_at_least("curvature-order", "observed convergence order in the step",
                            count, worst_order, cfg["min_order"]))

    inp = EpsteinInput.hyperbolic(catalog("koebe"))
    num = np.sort(principal_curvatures_numeric(inp, 0, h=h))
    checks.append(_at_most("koebe-origin-curvatures", "Koebe surface at 0 has curvatures (-3, -3/5)",
                           1, np.max(np.abs(num - np.array([-3.0, -0.6]))), cfg["curvature_tol"]))

    worst, count = 0.0, 0
    for z in (0j, 0.3 + 0.2j, -0.2 + 0.1j):
        base = principal_curvatures_analytic(inp, z)
        for s in (0.3, 1.0, 2.0):
            want = np.sort([flowed_curvature(k, s) for k in base])
            got = np.array(principal_curvatures_numeric(inp, z, h=h, s=s, extrapolate=True))
            worst = max(worst, float(np.max(np.abs(got - want) / np.maximum(1.0, np.abs(want)))))
            count += 1
    checks.append(_at_most("curvature-flow-law", "flowed curvatures follow (k cosh s + sinh s)/(k sinh s + cosh s)",
                           count, worst, cfg["law_tol"]))

    koebe = catalog("koebe")
    s = convexity_time_from_norm(sup_norm(schwarzian_differential(koebe)).value) + cfg["convexity_margin"]
    pts = _disk_points(rng, cfg["convexity_samples"])
    worst = min(math.exp(s) * 2 / (1 - abs(z) ** 2) - thurston_pullback(koebe, complex(z)) for z in pts)
    checks.append(_at_least("convexity-comparison", "past the convexity time the Thurston pullback is below exp(s) rho",
                            len(pts), worst, 0.0))

    worst, count = 0.0, 0
    for e in univalent_catalog():
        inp = EpsteinInput(e, ConformalMetric.hyperbolic(e.domain))
        for z in e.domain.sample_points(3, 6)[::4]:
            fr = epstein_frame(inp, complex(z))
            ho, x = fr.horosphere, fr.point
            v = np.array([(ho.base - x.xi).real, (ho.base - x.xi).imag, ho.euclidean_radius - x.t])
            worst = max(worst, abs(ho.residual(x)) / max(1.0, ho.euclidean_radius),
                        float(np.max(np.abs(np.subtract(fr.normal.direction, v / np.linalg.norm(v))))))
            count += 1
    checks.append(_at_most("frame-tangency", "the point lies on its horosphere and the normal aims at its center",
                           count, worst, cfg["flow_tol"]))
    return checks


# dome ---------------------------------------------------------------------------

def _suite_dome(cfg, rng):
    checks = []
    for dom in (UnitDisk(), SlitPlane(), TwoDiskUnion(0.5)):
        res = dome_epstein_identity_check(dom, n=cfg["samples"])
        checks.append(_at_most(f"dome-identity-{dom.tag}", "the Epstein point of the Thurston metric is the dome retraction",
                               res.samples, res.residual, cfg["identity_tol"]))

    slit = SlitPlane()
    checks.append(_at_most("lipschitz-slit-plane", "retraction is 2-Lipschitz from the hyperbolic metric",
                           72 * 8, lipschitz_estimate(slit), 2.0 + cfg["lipschitz_slack"]))
    checks.append(_at_most("lipschitz-disk", "retraction of the disk is an isometry",
                           72 * 8, abs(lipschitz_estimate(UnitDisk()) - 1.0), cfg["disk_lipschitz_tol"]))

    m = cfg["thurston_samples"]
    worst, count = 0.0, 0
    for dom in (UnitDisk(), slit, TwoDiskUnion(0.5)):
        pts = dom.sample_points(6, 12)
        pts = pts[rng.choice(len(pts), m, replace=False)]
        worst = max(worst, lipschitz_estimate(dom, "thurston", samples=pts))
        count += 8 * m
    checks.append(_at_most("lipschitz-thurston", "retraction is 1-Lipschitz from the Thurston metric",
                           count, worst, 1.0 + cfg["thurston_lipschitz_tol"]))

    worst = 0.0
    for a in (0.3, 0.5, 0.7):
        ridge = build_dome(TwoDiskUnion(a)).ridges[0]
        worst = max(worst, abs(ridge.angle - (math.pi - math.acos(2 * a * a - 1))))
    checks.append(_at_most("ridge-angle", "two-disk ridge angle is pi - arccos(2a^2 - 1)",
                           3, worst, cfg["angle_tol"]))

    worst, count = -math.inf, 0
    for dom in (UnitDisk(), slit, TwoDiskUnion(0.3), TwoDiskUnion(0.7)):
        edge = boundary_samples(dom)
        for face in build_dome(dom).faces:
            worst = max(worst, max(-float(face.plane.boundary.form(p)) / (1 + abs(p)) for p in edge))
            count += len(edge)
    checks.append(_at_most("support-planes", "no boundary point lies inside a face disk",
                           count, worst, cfg["support_tol"]))

    delta = 1e-9
    worst, count = 0.0, 0
    cross = [(TwoDiskUnion(0.5), lambda y: 1j * y), (slit, lambda y: slit.tip + 1j * y)]
    for dom, line in cross:
        dome = build_dome(dom)
        for y in rng.uniform(-0.8, 0.8, 25):
            z = line(y)
            worst = max(worst, hyperbolic_distance(dome_retract(dome, z - delta), dome_retract(dome, z + delta)))
            count += 1
    checks.append(_at_most("retraction-continuity", "no jump across the boundaries of face regions",
                           count, worst, cfg["continuity_tol"]))
    return checks


# wvolume ------------------------------------------------------------------------

def _spindles():
    return (ConvexRevolutionBody.spindle(1.0, 0.5, 3.0, 0.8), ConvexRevolutionBody.spindle(0.5, 1.2, 4.0, 0.4))


def _suite_wvolume(cfg, rng):
    checks = []
    radii = np.round(np.arange(1, 31) * 0.1, 10)
    worst = 0.0
    for r in radii:
        ball = ConvexRevolutionBody.ball(float(r), 1.0)
        want = -2 * math.pi * r
        worst = max(worst, abs(w_volume(ball) - want), abs(w_volume(ball, False) - want),
                    abs(w_volume_alternate(ball, False) - want))
    checks.append(_at_most("ball-w-volume", "W of a ball of radius r is -2 pi r by every route",
                           len(radii), worst, cfg["ball_tol"]))

    spindles = _spindles()
    worst = max(abs(w_volume(b) - w_volume_alternate(b)) for b in spindles)
    checks.append(_at_most("alternate-definition", "both W-volume formulas agree on spindles",
                           len(spindles), worst, cfg["alternate_tol"]))

    ts = np.linspace(0.0, 2.0, 9)[1:]
    worst, count = 0.0, 0
    bodies = (ConvexRevolutionBody.ball(0.5, 2.0), ConvexRevolutionBody.ball(1.5)) + spindles
    for body in bodies:
        closed = not body.is_ball
        w0 = w_volume(body, closed)
        for t in ts:
            worst = max(worst, abs(w_volume(body.neighborhood(float(t)), closed) - w0 + 2 * math.pi * t))
            count += 1
    checks.append(_at_most("neighborhood-scaling", "W of the t-neighborhood drops by 2 pi t",
                           count, worst, cfg["scaling_tol"]))

    worst = max(mean_curvature_identity_residual(b.neighborhood(t)).residual
                for b in spindles for t in (0.0, 0.5, 1.5))
    checks.append(_at_most("mean-curvature-spindles", "integral of H equals area(rho_N)/2 - area - 2 pi",
                           6, worst, cfg["mean_curvature_tol"]))
    worst = max(mean_curvature_identity_residual(ConvexRevolutionBody.ball(r), False).residual for r in (0.3, 1.0, 2.0))
    checks.append(_at_most("mean-curvature-balls", "the same identity on balls by quadrature",
                           3, worst, cfg["ball_mean_curvature_tol"]))

    worst, count = -math.inf, 0
    for body in spindles + tuple(s.neighborhood(0.7) for s in spindles):
        for _, p in body.sample_profile(60):
            k = p.kappa_parallel
            worst = max(worst, float(np.max(-p.kappa_meridian)), float(np.max(-k[np.isfinite(k)])))
            count += len(p.x)
    checks.append(_at_most("convexity", "both principal curvatures are nonnegative",
                           count, worst, cfg["convexity_tol"]))

    zs = np.exp(rng.uniform(-3.0, 3.0, 12)) * np.exp(2j * np.pi * rng.uniform(size=12))
    worst = 0.0
    for body in spindles:
        for t in (0.4, 1.3):
            far = body.neighborhood(t)
            for z in zs:
                worst = max(worst, abs(math.log(metric_at_infinity(far, z) / metric_at_infinity(body, z)) - t))
    checks.append(_at_most("metric-at-infinity-flow", "the metric at infinity of N_t is exp(t) times that of N",
                           4 * len(zs), worst, cfg["flow_tol"]))

    worst = 0.0
    for R in (1.5, 2.0, 3.0, 6.0):
        q = image_differential(catalog("annulus_cover", R=R))
        region = PolarRegion(0j, 1 / R, R)
        pair = GradientPair(q, region)
        value, _ = wp_pairing(pair, lambda z: wp_gradient(pair, z))
        worst = max(worst, abs(value + l2_norm(q, region).value ** 2))
    checks.append(_at_most("gradient-pairing", "pairing the gradient with phi gives minus the squared L2 norm",
                           4, worst, cfg["pairing_tol"]))

    R = 3.0
    q = image_differential(catalog("annulus_cover", R=R))
    region = PolarRegion(0j, 1 / R, R)
    pair = GradientPair(q, region)
    a, b = rng.uniform(-2, 2, 2)
    other = QuadraticDifferential(lambda z: 0.3 / np.asarray(z) ** 2 + 0.1, q.metric, q.domain)
    mixed = GradientPair(QuadraticDifferential(lambda z: a * q.phi(z) + b * other.phi(z), q.metric, q.domain), region)
    z = Annulus(R).sample_points(6, 12)
    lin = np.max(np.abs(wp_gradient(mixed, z) - a * wp_gradient(pair, z) - b * wp_gradient(GradientPair(other, region), z))
                 / (1 + np.abs(wp_gradient(mixed, z))))

    def mu(w):
        return 0.3 * np.conj(w) / abs(w)

    base, _ = wp_pairing(pair, lambda w: wp_gradient(pair, w))
    twice, _ = wp_pairing(pair, lambda w: 2 * wp_gradient(pair, w))
    extra, _ = wp_pairing(pair, mu)
    summed, _ = wp_pairing(pair, lambda w: wp_gradient(pair, w) + mu(w))
    scale = 1 + abs(base)
    worst = max(float(lin), abs(twice - 2 * base) / scale, abs(summed - base - extra) / scale)
    checks.append(_at_most("gradient-linearity", "gradient and pairing are linear",
                           len(z) + 3, worst, cfg["linearity_tol"]))
    return checks


# bounds -------------------------------------------------------------------------

STATED_SLOPE = 2 + 4 * math.sqrt(3 / math.pi)
DERIVED_SLOPE = 2 + 2 * math.sqrt(3 / math.pi)


def _suite_bounds(cfg, rng):
    checks = []
    t = 1e-8
    slope = B.thick_part_excess(t) / t
    checks.append(_at_most("thick-excess-slope", "F(t)/t tends to 2 + 4 sqrt(3/pi)",
                           1, abs(slope / STATED_SLOPE - 1), cfg["slope_rel_tol"]))
    checks.append(_at_most("thick-excess-slope-expanded", "F(t)/t tends to 2 + 2 sqrt(3/pi), the first-order expansion",
                           1, abs(slope / DERIVED_SLOPE - 1), cfg["slope_rel_tol"]))
    ratio = (B.l2_bending_factor(1e-10) / 1e-10**0.2) / (B.l2_bending_factor(1e-12) / 1e-12**0.2)
    checks.append(_at_most("bending-factor-stability", "G_K(t)/t^(1/5) settles as t goes to 0",
                           2, abs(ratio - 1), cfg["stability_tol"]))

    worst, count = 0.0, 0
    for chi in (-2, -4, -10, -22):
        for K in (0.0, 0.25, 1.0, 1.5):
            want = 4 * math.pi * abs(chi) * K
            worst = max(worst, abs(B.bending_bound_sup(chi, K) - want) / max(1.0, want))
            count += 1
        want = 6 * math.pi * abs(chi)
        worst = max(worst, abs(B.bending_bound_incompressible(chi) - want) / want,
                    abs(B.bending_bound_sup(chi, 1.5) - want) / want)
        count += 2
    checks.append(_at_most("bending-bound-evaluators", "4 pi |chi| K and 6 pi |chi| are reproduced",
                           count, worst, cfg["exact_tol"]))

    ts = np.logspace(-3, 0, 25)
    g = [B.l2_bending_factor(v) for v in ts]
    checks.append(_at_least("bending-factor-monotone", "G_K increases on [1e-3, 1]",
                            len(ts), min(b - a for a, b in zip(g, g[1:])), 0.0))
    return checks


SUITES: dict[str, Callable] = {
    "schwarzian": _suite_schwarzian,
    "anderson": _suite_anderson,
    "epstein": _suite_epstein,
    "dome": _suite_dome,
    "wvolume": _suite_wvolume,
    "bounds": _suite_bounds,
}


def run_suite(name: str, seed: int = 0, cfg: dict | None = None) -> VerifySuiteReport:
    if name not in SUITES:
        raise UnsupportedError(f"unknown suite {name!r}; known: {', '.join(SUITES)}, all")
    cfg = load_config() if cfg is None else cfg
    index = list(SUITES).index(name)
    rng = np.random.default_rng([seed, index])
    checks = SUITES[name](cfg[name], rng)
    return VerifySuiteReport(name, seed, checks, format_config(cfg, [name]))


def run_verify(name: str, seed: int = 0, cfg: dict | None = None) -> list:
    """Reports for one suite, or for every suite in declared order when ``name`` is "all"."""
    names = list(SUITES) if name == "all" else [name]
    return [run_suite(n, seed, cfg) for n in names]


def render(reports: list) -> tuple[str, str]:
    """(text report, JSON summary) for a list of suite reports."""
    ok = all(r.passed for r in reports)
    text = "\n".join(r.text() for r in reports) + f"\noverall {'PASS' if ok else 'FAIL'}\n"
    summary = json.dumps({"passed": ok, "suites": [r.summary() for r in reports]}, indent=2, sort_keys=True)
    return text, summary + "\n"
