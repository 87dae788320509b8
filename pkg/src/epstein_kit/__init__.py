"""Numerical geometry of Schwarzian derivatives, Epstein surfaces, domes and W-volume."""

from .riemann_sphere import INF, MobiusMap, RoundDisk, disk_map, mobius_apply, round_disk_metric
from .halfspace import (
    GeodesicPlane,
    H3Point,
    Horosphere,
    UnitTangent,
    geodesic_flow,
    horosphere_from,
    hyperbolic_distance,
    project_to_plane,
    visual_metric,
)
from .domains import ConformalMetric, PlaneDomain, domain_from_name
from .schwarzian import catalog, l2_norm, schwarzian_differential, sup_norm
from .metrics import thurston_metric, thurston_pullback
from .epstein import EpsteinInput, epstein_envelope, epstein_flow, epstein_frame
from .domes import build_dome, dome_retract
from .wvolume import ConvexRevolutionBody, w_volume, w_volume_alternate, wp_gradient, wp_pairing
from .verify import run_suite, run_verify

__version__ = "0.1.0"

__all__ = [
    "INF",
    "MobiusMap",
    "RoundDisk",
    "disk_map",
    "mobius_apply",
    "round_disk_metric",
    "GeodesicPlane",
    "H3Point",
    "Horosphere",
    "UnitTangent",
    "geodesic_flow",
    "horosphere_from",
    "hyperbolic_distance",
    "project_to_plane",
    "visual_metric",
    "ConformalMetric",
    "PlaneDomain",
    "domain_from_name",
    "catalog",
    "l2_norm",
    "schwarzian_differential",
    "sup_norm",
    "thurston_metric",
    "thurston_pullback",
    "EpsteinInput",
    "epstein_envelope",
    "epstein_flow",
    "epstein_frame",
    "build_dome",
    "dome_retract",
    "ConvexRevolutionBody",
    "w_volume",
    "w_volume_alternate",
    "wp_gradient",
    "wp_pairing",
    "run_suite",
    "run_verify",
    "__version__",
]
