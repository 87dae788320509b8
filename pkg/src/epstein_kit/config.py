"""Tolerances and sample sizes for the verification suites.

A config file is plain text with one ``key = value`` per line; ``#`` starts a
comment.  Keys not mentioned keep their defaults, unknown keys are an error.
The defaults, by suite:

schwarzian
    nehari_tol (1e-6)        slack allowed above 3/2 for univalent maps
    saturation_tol (1e-6)    distance of the Koebe sup norm from 3/2
    kra_maskit_samples (1000)
    l2_samples (200)         points for the pointwise L2 comparison
    invariance_samples (50)  random automorphisms
    invariance_tol (1e-9)    relative
    cocycle_samples (50)
    cocycle_tol (1e-10)      relative
anderson
    samples (100)            disk points for the Koebe map
    catalog_samples (25)     disk points for every other univalent map
    local_samples (12)       (center, radius) pairs for the local bound
    slack_tol (1e-6)         allowed violation of an inequality
    witness_tol (1e-9)       boundary points found inside a witness disk
epstein
    flow_samples (1000)      random (z, s) pairs
    flow_tol (1e-9)          relative to the size of the point
    curvature_h (1e-3)       finite difference step
    curvature_tol (1e-3)
    min_order (1.8)          observed convergence order in h
    law_tol (1e-6)           flowed curvatures against the flow law
    convexity_margin (0.05)
    convexity_samples (20)
dome
    samples (100)            identity samples per domain
    identity_tol (1e-6)
    lipschitz_slack (1e-2)   above 2 on the slit plane
    disk_lipschitz_tol (1e-3)
    thurston_lipschitz_tol (1e-3)
    thurston_samples (6)     base points for the Thurston quotient
    angle_tol (1e-9)
    support_tol (1e-9)
    continuity_tol (1e-6)
wvolume
    ball_tol (1e-6)
    scaling_tol (1e-5)
    alternate_tol (1e-5)     the two W-volume routes on spindles
    convexity_tol (1e-12)    negative principal curvature allowed
    mean_curvature_tol (1e-5)  spindles
    ball_mean_curvature_tol (1e-9)
    flow_tol (1e-6)          log ratio of metrics at infinity against t
    pairing_tol (1e-6)
    linearity_tol (1e-12)
bounds
    slope_rel_tol (0.01)     F(t)/t against its limit at t = 1e-8
    stability_tol (0.02)     G_K(t)/t^(1/5) between 1e-10 and 1e-12
    exact_tol (1e-12)        relative, closed-form bending bounds
"""

from __future__ import annotations

import math
from pathlib import Path

__all__ = ["DEFAULTS", "ConfigError", "load_config", "parse_config", "format_config"]

DEFAULTS: dict[str, dict[str, float]] = {
    "schwarzian": {
        "nehari_tol": 1e-6,
        "saturation_tol": 1e-6,
        "kra_maskit_samples": 1000,
        "l2_samples": 200,
        "invariance_samples": 50,
        "invariance_tol": 1e-9,
        "cocycle_samples": 50,
        "cocycle_tol": 1e-10,
    },
    "anderson": {
        "samples": 100,
        "catalog_samples": 25,
        "local_samples": 12,
        "slack_tol": 1e-6,
        "witness_tol": 1e-9,
    },
    "epstein": {
        "flow_samples": 1000,
        "flow_tol": 1e-9,
        "curvature_h": 1e-3,
        "curvature_tol": 1e-3,
        "min_order": 1.8,
        "law_tol": 1e-6,
        "convexity_margin": 0.05,
        "convexity_samples": 20,
    },
    "dome": {
        "samples": 100,
        "identity_tol": 1e-6,
        "lipschitz_slack": 1e-2,
        "disk_lipschitz_tol": 1e-3,
        "thurston_lipschitz_tol": 1e-3,
        "thurston_samples": 6,
        "angle_tol": 1e-9,
        "support_tol": 1e-9,
        "continuity_tol": 1e-6,
    },
    "wvolume": {
        "ball_tol": 1e-6,
        "scaling_tol": 1e-5,
        "alternate_tol": 1e-5,
        "convexity_tol": 1e-12,
        "mean_curvature_tol": 1e-5,
        "ball_mean_curvature_tol": 1e-9,
        "flow_tol": 1e-6,
        "pairing_tol": 1e-6,
        "linearity_tol": 1e-12,
    },
    "bounds": {
        "slope_rel_tol": 0.01,
        "stability_tol": 0.02,
        "exact_tol": 1e-12,
    },
}

_INTEGER_KEYS = {k for sec in DEFAULTS.values() for k, v in sec.items() if isinstance(v, int)}


class ConfigError(ValueError):
    """Malformed config text or an unknown key."""


def _copy_defaults() -> dict:
    return {suite: dict(values) for suite, values in DEFAULTS.items()}


def parse_config(text: str) -> dict:
    """Defaults overridden by ``suite.key = value`` lines of ``text``."""
    cfg = _copy_defaults()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = (part.strip() for part in line.partition("="))
        if not sep or not key or not value:
            raise ConfigError(f"line {lineno}: expected 'suite.key = value'")
        suite, dot, name = key.partition(".")
        if not dot or suite not in cfg or name not in cfg[suite]:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        try:
            number = float(value)
        except ValueError:
            raise ConfigError(f"line {lineno}: {value!r} is not a number") from None
        if not math.isfinite(number):
            raise ConfigError(f"line {lineno}: {key} must be finite")
        if name in _INTEGER_KEYS:
            if number != int(number) or number < 1:
                raise ConfigError(f"line {lineno}: {key} needs a positive integer")
            number = int(number)
        elif not number >= 0:
            raise ConfigError(f"line {lineno}: {key} must be nonnegative")
        cfg[suite][name] = number
    return cfg


def load_config(path: str | Path | None = None) -> dict:
    if path is None:
        return _copy_defaults()
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from None
    return parse_config(text)


def format_config(cfg: dict, suites=None) -> list[str]:
    """``suite.key = value`` lines in a fixed order, for report headers."""
    lines = []
    for suite in suites or cfg:
        for name, value in cfg[suite].items():
            lines.append(f"{suite}.{name} = {value!r}")
    return lines
