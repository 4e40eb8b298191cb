"""
Coincidence visibility
======================

Two polarizers watch a polarized two-mode gaussian.  The coincidence rate
oscillates with the angle difference, and the contrast V crosses 1/3
exactly at the classical bound.
"""

import math

import numpy as np

from stochoptics import detection as d
from stochoptics import gaussian as g

n, x = 0.3, 0.8
state = g.TwoModeWigner(n, x, polarized=True)
print("state is", g.classify_two_mode(n, x).value)
for dphi in np.linspace(0, math.pi / 2, 5):
    closed = d.coincidence_closed(n, x, dphi)
    settings = (d.PolarizerSetting(dphi), d.PolarizerSetting(0.0))
    est = d.coincidence_mc(state, settings, 400_000, seed=0)
    print(f"dphi={dphi:.3f} closed={closed.r12:.5f} mc={est.mean:.5f} +- {est.std_error:.5f}")

print("V at the bound:", d.coincidence_closed(1.0, g.classical_bound(1.0), 0).visibility)

# How weak must the light be before V can pass 1/sqrt(2)?
print("critical n for V = 0.7071:", d.critical_n(1 / math.sqrt(2)))
for v in (0.5, 0.8, 0.9):
    print(f"critical n for V = {v}: {d.critical_n(v):.4f}")
