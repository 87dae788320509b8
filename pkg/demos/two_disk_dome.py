"""Dome of a union of two disks: ridge angle, retraction and the Thurston metric."""

import math

from epstein_kit import build_dome, dome_retract, hyperbolic_distance, thurston_metric
from epstein_kit.domains import TwoDiskUnion
from epstein_kit.domes import dome_epstein_identity_check

for a in (0.3, 0.5, 0.7):
    domain = TwoDiskUnion(a)
    dome = build_dome(domain)
    ridge = dome.ridges[0]
    expected = math.pi - math.acos(2 * a * a - 1)
    check = dome_epstein_identity_check(domain, n=50)
    print(f"a = {a}: {len(dome.faces)} faces, ridge angle {ridge.angle:.12f} (expected {expected:.12f}), "
          f"Epstein vs retraction residual {check.residual:.2e}")

domain = TwoDiskUnion(0.5)
dome = build_dome(domain)
for z in (0.1j, 0.6 + 0.2j, -0.9 + 0.1j):
    x = dome_retract(dome, z)
    print(f"z = {z}: retracts to ({x.xi:.6f}, t = {x.t:.6f}), "
          f"Thurston density {thurston_metric(domain, z).density:.6f}")

p, q = dome_retract(dome, -0.05j), dome_retract(dome, 0.05j)
print(f"distance between retractions across the ridge: {hyperbolic_distance(p, q):.6f}")
