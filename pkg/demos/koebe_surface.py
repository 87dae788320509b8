"""Curvatures of the Koebe Epstein surface and its normal flow, plus an OBJ mesh.

Run: python3 demos/koebe_surface.py [out.obj]
"""

import sys

import numpy as np

from epstein_kit import EpsteinInput, catalog
from epstein_kit.epstein import flowed_curvature, principal_curvatures_analytic, principal_curvatures_numeric
from epstein_kit.mesh import epstein_mesh, write_obj

inp = EpsteinInput.hyperbolic(catalog("koebe"))

print("z          exact curvatures          finite differences (h = 1e-3)")
for z in (0j, 0.3 + 0.2j, -0.5j):
    exact = np.sort(principal_curvatures_analytic(inp, z))
    numeric = np.array(principal_curvatures_numeric(inp, z, h=1e-3))
    print(f"{z!s:10} {exact.round(6)!s:25} {numeric.round(6)}")

print("\nflowed curvatures at z = 0")
base = principal_curvatures_analytic(inp, 0j)
for s in (0.0, 0.5, 1.0, 2.0):
    law = sorted(flowed_curvature(k, s) for k in base)
    print(f"s = {s:3.1f}  law {np.round(law, 6)}")

if len(sys.argv) > 1:
    path = write_obj(epstein_mesh("koebe", levels=16, angles=32), sys.argv[1], "Koebe Epstein surface")
    print(f"\nwrote {path}")
