"""W-volume of balls and spindles and its drop under taking neighborhoods."""

import math

from epstein_kit import ConvexRevolutionBody, w_volume, w_volume_alternate
from epstein_kit.wvolume import mean_curvature_identity_residual

print("ball radius   W (quadrature)   -2 pi r")
for r in (0.5, 1.0, 2.0):
    print(f"{r:11.2f}   {w_volume(ConvexRevolutionBody.ball(r), closed_form=False):14.10f}   {-2 * math.pi * r:.10f}")

spindle = ConvexRevolutionBody.spindle(1.0, 0.5, 3.0, 0.8)
print("\nspindle neighborhoods")
print("   t   W            W alternate  W + 2 pi t   mean curvature residual")
for t in (0.0, 0.5, 1.0, 2.0):
    body = spindle.neighborhood(t)
    w = w_volume(body)
    print(f"{t:4.1f}   {w:10.6f}   {w_volume_alternate(body):10.6f}   {w + 2 * math.pi * t:10.6f}   "
          f"{mean_curvature_identity_residual(body).residual:.2e}")
